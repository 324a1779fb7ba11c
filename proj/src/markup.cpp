#include <string>

#include "bitext/segmenter.hpp"

namespace bitext {
namespace {

void append_escaped(std::u32string& out, std::u32string_view text) {
  for (char32_t ch : text) {
    switch (ch) {
      case U'<': out += U"&lt;"; break;
      case U'>': out += U"&gt;"; break;
      case U'&': out += U"&amp;"; break;
      default: out.push_back(ch);
    }
  }
}

std::u32string_view kind_attribute(PassageKind kind) {
  switch (kind) {
    case PassageKind::sentence: return U"";
    case PassageKind::heading: return U"heading";
    case PassageKind::list_item: return U"list-item";
    case PassageKind::other: return U"other";
  }
  return U"";
}

class MarkupParser {
 public:
  MarkupParser(std::u32string_view in, Language lang) : in_(in), builder_(lang) {}

  Document run() {
    while (true) {
      skip_space();
      if (at_end()) break;
      expect_tag(U"<p>", "expected <p>");
      builder_.begin_paragraph();
      std::size_t before = builder_.size();
      while (true) {
        skip_space();
        if (at_end()) fail("unterminated <p>");
        if (peek_is(U"</p>")) {
          if (builder_.size() == before) fail("empty <p> element");
          advance(4);
          break;
        }
        parse_sentence();
      }
    }
    return std::move(builder_).build();
  }

 private:
  void parse_sentence() {
    PassageKind kind = PassageKind::sentence;
    if (peek_is(U"<s>")) {
      advance(3);
    } else if (peek_is(U"<s type=\"")) {
      advance(9);
      std::size_t close = in_.find(U'"', pos_);
      if (close == std::u32string_view::npos) fail("unterminated type attribute");
      std::u32string_view value = in_.substr(pos_, close - pos_);
      if (value == U"heading") {
        kind = PassageKind::heading;
      } else if (value == U"list-item") {
        kind = PassageKind::list_item;
      } else if (value == U"other") {
        kind = PassageKind::other;
      } else {
        fail("unknown passage type");
      }
      advance(close - pos_);
      expect_tag(U"\">", "malformed <s> tag");
    } else if (peek_is(U"<")) {
      fail(tag_error());
    } else {
      fail("text outside <s>");
    }
    std::u32string text;
    while (true) {
      if (at_end()) fail("unterminated <s>");
      char32_t ch = in_[pos_];
      if (ch == U'<') {
        if (!peek_is(U"</s>")) fail(tag_error());
        advance(4);
        break;
      }
      if (ch == U'&') {
        text.push_back(parse_entity());
        continue;
      }
      if (ch == U'\n') fail("newline inside <s>");
      text.push_back(ch);
      advance(1);
    }
    if (text.empty()) fail("empty <s> element");
    builder_.add(std::move(text), kind);
  }

  char32_t parse_entity() {
    for (auto [name, ch] : {std::pair{U"&lt;", U'<'}, std::pair{U"&gt;", U'>'},
                            std::pair{U"&amp;", U'&'}}) {
      std::u32string_view n(name);
      if (peek_is(n)) {
        advance(n.size());
        return ch;
      }
    }
    fail("unknown entity");
  }

  std::string tag_error() const {
    std::size_t close = in_.find(U'>', pos_);
    std::size_t len = close == std::u32string_view::npos ? 1 : close - pos_ + 1;
    std::u32string_view tag = in_.substr(pos_, std::min<std::size_t>(len, 32));
    std::string ascii;
    for (char32_t ch : tag) ascii.push_back(ch < 0x80 ? static_cast<char>(ch) : '?');
    return "unexpected tag " + ascii;
  }

  void expect_tag(std::u32string_view tag, const char* what) {
    if (!peek_is(tag)) {
      if (!at_end() && in_[pos_] == U'<') fail(tag_error());
      fail(what);
    }
    advance(tag.size());
  }

  bool peek_is(std::u32string_view s) const { return in_.substr(pos_, s.size()) == s; }
  bool at_end() const { return pos_ >= in_.size(); }

  void skip_space() {
    while (!at_end()) {
      char32_t ch = in_[pos_];
      if (ch == U'\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (ch == U' ' || ch == U'\t' || ch == U'\r') {
        advance(1);
      } else {
        break;
      }
    }
  }

  void advance(std::size_t n) {
    pos_ += n;
    col_ += n;
  }

  [[noreturn]] void fail(const std::string& what) const { throw MarkupError(what, line_, col_); }

  std::u32string_view in_;
  DocumentBuilder builder_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

std::u32string emit_markup(const Document& doc) {
  std::u32string out;
  bool first = true;
  for (auto [begin, end] : doc.paragraphs()) {
    if (!first) out.push_back(U'\n');
    first = false;
    out += U"<p>";
    for (std::size_t i = begin; i < end; ++i) {
      std::u32string_view type = kind_attribute(doc[i].kind());
      if (type.empty()) {
        out += U"<s>";
      } else {
        out += U"<s type=\"";
        out += type;
        out += U"\">";
      }
      append_escaped(out, doc[i].text());
      out += U"</s>";
    }
    out += U"</p>";
  }
  return out;
}

Document parse_markup(std::u32string_view marked, Language lang) {
  return MarkupParser(marked, lang).run();
}

}  // namespace bitext
