#include "bitext/segmenter.hpp"

#include <algorithm>

namespace bitext {
namespace {

bool is_space(char32_t ch) {
  return ch == U' ' || ch == U'\t' || ch == U'\n' || ch == U'\r' || ch == U'\f' || ch == U'\v';
}

bool is_ascii_digit(char32_t ch) { return ch >= U'0' && ch <= U'9'; }

bool is_ascii_alpha(char32_t ch) {
  return (ch >= U'a' && ch <= U'z') || (ch >= U'A' && ch <= U'Z');
}

bool contains(std::u32string_view set, char32_t ch) {
  return set.find(ch) != std::u32string_view::npos;
}

/// One physical line, or the part of it between paragraph marks.
struct LinePiece {
  std::u32string_view text;
  bool starts_paragraph;
};

std::vector<LinePiece> split_pieces(std::u32string_view raw, char32_t mark) {
  std::vector<LinePiece> pieces;
  bool pending_break = true;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    std::size_t nl = raw.find(U'\n', pos);
    if (nl == std::u32string_view::npos) nl = raw.size();
    std::u32string_view line = raw.substr(pos, nl - pos);
    if (std::all_of(line.begin(), line.end(), is_space)) {
      pending_break = true;
    } else {
      std::size_t start = 0;
      while (start < line.size()) {
        std::size_t next = line.find(mark, start + 1);
        if (next == std::u32string_view::npos) next = line.size();
        std::u32string_view part = line.substr(start, next - start);
        bool marked = part.front() == mark;
        if (!std::all_of(part.begin(), part.end(), is_space)) {
          pieces.push_back({part, pending_break || marked});
          pending_break = false;
        }
        start = next;
      }
    }
    pos = nl + 1;
  }
  return pieces;
}

/// Length of a leading bullet or enumerator (including its trailing space),
/// skipping an optional paragraph mark and leading whitespace; 0 if none.
std::size_t list_marker_length(std::u32string_view s, char32_t mark) {
  std::size_t i = 0;
  while (i < s.size() && (is_space(s[i]) || s[i] == mark)) ++i;
  std::size_t start = i;
  auto followed_by_space = [&](std::size_t k) { return k < s.size() && is_space(s[k]); };
  if (i < s.size() && contains(U"-*•·‧", s[i]) && followed_by_space(i + 1)) return i + 2;
  if (i < s.size() && s[i] == U'(') {
    std::size_t k = i + 1;
    while (k < s.size() && k - i <= 4 && (is_ascii_alpha(s[k]) || is_ascii_digit(s[k]))) ++k;
    if (k > i + 1 && k - i <= 4 && k < s.size() && s[k] == U')' && followed_by_space(k + 1)) {
      return k + 2;
    }
    return 0;
  }
  std::size_t k = i;
  while (k < s.size() && k - start < 3 && is_ascii_digit(s[k])) ++k;
  if (k > start && k < s.size() && (s[k] == U'.' || s[k] == U')') && followed_by_space(k + 1)) {
    return k + 2;
  }
  return 0;
}

class Segmenter {
 public:
  Segmenter(Language lang, const SegmentationRules& rules) : rules_(rules), builder_(lang) {}

  Document run(std::u32string_view raw) {
    auto pieces = split_pieces(raw, rules_.paragraph_mark);
    for (const LinePiece& piece : pieces) {
      if (piece.starts_paragraph) {
        flush_at_paragraph_end();
        builder_.begin_paragraph();
        passages_in_paragraph_ = 0;
      }
      feed_line(piece.text);
    }
    flush_at_paragraph_end();
    return std::move(builder_).build();
  }

 private:
  void feed_line(std::u32string_view line) {
    std::size_t scan_from = 0;
    if (rules_.detect_list_items) {
      if (std::size_t m = list_marker_length(line, rules_.paragraph_mark); m > 0) {
        flush_at_paragraph_end();
        list_item_ = true;
        append(line.substr(0, m));
        scan_from = m;
      }
    }
    if (!buffer_.empty()) append_space();
    ++buffer_lines_;
    for (std::size_t i = scan_from; i < line.size(); ++i) {
      char32_t ch = line[i];
      append(ch);
      if (!contains(rules_.terminators, ch)) continue;
      std::size_t j = i + 1;
      while (j < line.size() && contains(rules_.closers, line[j])) ++j;
      if (!breaks_here(line, i, j)) continue;
      for (std::size_t k = i + 1; k < j; ++k) append(line[k]);
      i = j - 1;
      flush(list_item_ ? PassageKind::list_item : PassageKind::sentence);
    }
    if (!buffer_.empty()) {
      std::size_t end = buffer_.size();
      while (end > 0 && buffer_[end - 1] == U' ') --end;
      if (end > 0 && contains(rules_.line_end_colons, buffer_[end - 1])) {
        flush(list_item_ ? PassageKind::list_item : PassageKind::heading);
      }
    }
  }

  /// Terminator at line[i]; closers run up to line[j].
  bool breaks_here(std::u32string_view line, std::size_t i, std::size_t j) const {
    if (rules_.break_needs_space && j < line.size() && !is_space(line[j])) return false;
    if (line[i] != U'.') return true;
    if (rules_.decimal_guard && i > 0 && j == i + 1 && j < line.size() &&
        is_ascii_digit(line[i - 1]) && is_ascii_digit(line[j])) {
      return false;
    }
    // The whitespace-delimited token ending at the period.
    std::size_t tok = i;
    while (tok > 0 && !is_space(line[tok - 1])) --tok;
    std::u32string_view token = line.substr(tok, i + 1 - tok);
    if (rules_.single_letter_abbreviations && i >= 1 && is_ascii_alpha(line[i - 1]) &&
        (i == 1 || !is_ascii_alpha(line[i - 2]))) {
      return false;
    }
    return std::find(rules_.abbreviation_exceptions.begin(), rules_.abbreviation_exceptions.end(),
                     token) == rules_.abbreviation_exceptions.end();
  }

  void append(char32_t ch) {
    if (is_space(ch)) {
      append_space();
      return;
    }
    buffer_.push_back(ch);
  }

  void append(std::u32string_view s) {
    for (char32_t ch : s) append(ch);
  }

  void append_space() {
    if (!buffer_.empty() && buffer_.back() != U' ') buffer_.push_back(U' ');
  }

  void flush(PassageKind kind) {
    while (!buffer_.empty() && buffer_.back() == U' ') buffer_.pop_back();
    if (!buffer_.empty()) {
      builder_.add(std::move(buffer_), kind);
      ++passages_in_paragraph_;
    }
    buffer_.clear();
    buffer_lines_ = 0;
    list_item_ = false;
  }

  void flush_at_paragraph_end() {
    std::size_t end = buffer_.size();
    while (end > 0 && (buffer_[end - 1] == U' ' || (contains(rules_.closers, buffer_[end - 1]) &&
                                                    !contains(rules_.terminators, buffer_[end - 1])))) {
      --end;
    }
    const bool terminated = end > 0 && contains(rules_.terminators, buffer_[end - 1]);
    PassageKind kind = PassageKind::other;
    if (list_item_) {
      kind = PassageKind::list_item;
    } else if (terminated) {
      kind = PassageKind::sentence;
    } else if (buffer_lines_ == 1 && passages_in_paragraph_ == 0) {
      kind = PassageKind::heading;
    }
    flush(kind);
  }

  const SegmentationRules& rules_;
  DocumentBuilder builder_;
  std::u32string buffer_;
  std::size_t buffer_lines_ = 0;
  std::size_t passages_in_paragraph_ = 0;
  bool list_item_ = false;
};

}  // namespace

SegmentationRules SegmentationRules::english() {
  SegmentationRules r;
  r.terminators = U".!?";
  r.closers = U".!?\"')]’”";
  r.break_needs_space = true;
  r.single_letter_abbreviations = true;
  r.decimal_guard = true;
  r.abbreviation_exceptions = {U"Mr.",  U"Mrs.", U"Ms.",  U"Dr.",  U"Prof.", U"St.",
                               U"No.",  U"Nos.", U"Hon.", U"Sir.", U"Rev.",  U"vs.",
                               U"e.g.", U"i.e.", U"cf.",  U"Cap.", U"Ord.",  U"para."};
  r.line_end_colons = U":：";
  return r;
}

SegmentationRules SegmentationRules::chinese() {
  SegmentationRules r;
  r.terminators = U"。！？；";
  r.closers = U"。！？；」』）”’\"')";
  r.break_needs_space = false;
  r.single_letter_abbreviations = false;
  r.decimal_guard = false;
  r.line_end_colons = U":：";
  return r;
}

SegmentationRules SegmentationRules::for_language(Language lang) {
  return lang == Language::english ? english() : chinese();
}

Document segment(std::u32string_view raw, Language lang, const SegmentationRules& rules) {
  if (rules.terminators.empty()) {
    throw std::invalid_argument("segmentation rules need at least one terminator");
  }
  return Segmenter(lang, rules).run(raw);
}

Document segment(std::u32string_view raw, Language lang) {
  return segment(raw, lang, SegmentationRules::for_language(lang));
}

}  // namespace bitext
