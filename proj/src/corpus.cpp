#include "bitext/corpus.hpp"

#include <algorithm>

#include "bitext/length_metric.hpp"

namespace bitext {

std::string_view to_string(Language lang) {
  return lang == Language::english ? "english" : "chinese";
}

std::string_view to_string(PassageKind kind) {
  switch (kind) {
    case PassageKind::sentence: return "sentence";
    case PassageKind::heading: return "heading";
    case PassageKind::list_item: return "list-item";
    case PassageKind::other: return "other";
  }
  return "other";
}

Language parse_language(std::string_view tag) {
  if (tag == "en" || tag == "english") return Language::english;
  if (tag == "zh" || tag == "chinese") return Language::chinese;
  throw std::invalid_argument("unknown language tag '" + std::string(tag) + "'");
}

Passage::Passage(std::size_t id, std::u32string text, PassageKind kind)
    : id_(id), text_(std::move(text)), kind_(kind), length_(hybrid_length(text_)) {}

Document::Document(Language lang, std::vector<Passage> passages,
                   std::vector<std::size_t> paragraph_breaks)
    : lang_(lang), passages_(std::move(passages)), paragraph_breaks_(std::move(paragraph_breaks)) {
  for (std::size_t i = 0; i < passages_.size(); ++i) {
    if (passages_[i].id() != i) {
      throw std::invalid_argument("passage ids must be contiguous from 0; passage " +
                                  std::to_string(i) + " has id " +
                                  std::to_string(passages_[i].id()));
    }
    if (passages_[i].text().empty()) {
      throw std::invalid_argument("passage " + std::to_string(i) + " is empty");
    }
  }
  if (!passages_.empty() && (paragraph_breaks_.empty() || paragraph_breaks_.front() != 0)) {
    throw std::invalid_argument("a non-empty document must have a paragraph break at 0");
  }
  for (std::size_t k = 0; k < paragraph_breaks_.size(); ++k) {
    if (paragraph_breaks_[k] >= passages_.size()) {
      throw std::invalid_argument("paragraph break " + std::to_string(paragraph_breaks_[k]) +
                                  " is not a passage id");
    }
    if (k > 0 && paragraph_breaks_[k] <= paragraph_breaks_[k - 1]) {
      throw std::invalid_argument("paragraph breaks must be strictly increasing");
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> Document::paragraphs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(paragraph_breaks_.size());
  for (std::size_t k = 0; k < paragraph_breaks_.size(); ++k) {
    std::size_t end = k + 1 < paragraph_breaks_.size() ? paragraph_breaks_[k + 1] : passages_.size();
    out.emplace_back(paragraph_breaks_[k], end);
  }
  return out;
}

Document Document::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > passages_.size()) throw std::out_of_range("Document::slice");
  std::vector<Passage> ps;
  ps.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    ps.emplace_back(i - begin, passages_[i].text(), passages_[i].kind());
  }
  std::vector<std::size_t> breaks;
  if (begin < end) breaks.push_back(0);
  for (std::size_t b : paragraph_breaks_) {
    if (b > begin && b < end) breaks.push_back(b - begin);
  }
  return Document(lang_, std::move(ps), std::move(breaks));
}

void DocumentBuilder::add(std::u32string text, PassageKind kind) {
  if (pending_break_) {
    breaks_.push_back(passages_.size());
    pending_break_ = false;
  }
  passages_.emplace_back(passages_.size(), std::move(text), kind);
}

Document DocumentBuilder::build() && {
  return Document(lang_, std::move(passages_), std::move(breaks_));
}

bool is_producible(BeadClass cls) {
  return std::find(kProducibleClasses.begin(), kProducibleClasses.end(), cls) !=
         kProducibleClasses.end();
}

std::size_t tie_rank(BeadClass cls) {
  auto it = std::find(kProducibleClasses.begin(), kProducibleClasses.end(), cls);
  if (it == kProducibleClasses.end()) {
    throw std::invalid_argument("bead class " + to_string(cls) + " is not producible");
  }
  return static_cast<std::size_t>(it - kProducibleClasses.begin());
}

std::string to_string(BeadClass cls) {
  return std::to_string(cls.a) + "-" + std::to_string(cls.b);
}

Bead Bead::at(BeadClass cls, std::size_t eng_begin, std::size_t chi_begin) {
  return Bead{cls, Range{eng_begin, eng_begin + static_cast<std::size_t>(cls.a)},
              Range{chi_begin, chi_begin + static_cast<std::size_t>(cls.b)}};
}

std::optional<AlignmentViolation> validate_alignment(const Alignment& al, std::size_t n1,
                                                     std::size_t n2) {
  std::size_t next_e = 0;
  std::size_t next_c = 0;
  for (std::size_t k = 0; k < al.beads.size(); ++k) {
    const Bead& b = al.beads[k];
    if (b.cls.a < 0 || b.cls.b < 0) return AlignmentViolation{k, "negative bead class"};
    if (b.eng.end < b.eng.begin || b.chi.end < b.chi.begin) {
      return AlignmentViolation{k, "inverted range"};
    }
    if (b.eng.size() != static_cast<std::size_t>(b.cls.a) ||
        b.chi.size() != static_cast<std::size_t>(b.cls.b)) {
      return AlignmentViolation{k, "range sizes do not match class " + to_string(b.cls)};
    }
    if (b.eng.empty() && b.chi.empty()) return AlignmentViolation{k, "bead is empty on both sides"};
    if (b.eng.begin != next_e) {
      return AlignmentViolation{k, "English range starts at " + std::to_string(b.eng.begin) +
                                       ", expected " + std::to_string(next_e) +
                                       (b.eng.begin < next_e ? " (overlap)" : " (gap)")};
    }
    if (b.chi.begin != next_c) {
      return AlignmentViolation{k, "Chinese range starts at " + std::to_string(b.chi.begin) +
                                       ", expected " + std::to_string(next_c) +
                                       (b.chi.begin < next_c ? " (overlap)" : " (gap)")};
    }
    if (b.eng.end > n1) return AlignmentViolation{k, "English range exceeds document size"};
    if (b.chi.end > n2) return AlignmentViolation{k, "Chinese range exceeds document size"};
    next_e = b.eng.end;
    next_c = b.chi.end;
  }
  if (next_e != n1 || next_c != n2) {
    return AlignmentViolation{al.beads.size(), "coverage incomplete: English " +
                                                   std::to_string(next_e) + "/" +
                                                   std::to_string(n1) + ", Chinese " +
                                                   std::to_string(next_c) + "/" +
                                                   std::to_string(n2)};
  }
  return std::nullopt;
}

HybridLength range_length(const Document& doc, Range r) {
  HybridLength total = 0;
  for (std::size_t i = r.begin; i < r.end; ++i) total += doc[i].length();
  return total;
}

}  // namespace bitext
