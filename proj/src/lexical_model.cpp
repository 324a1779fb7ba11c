#include "bitext/lexical_model.hpp"

#include <cmath>
#include <stdexcept>

namespace bitext {
namespace {

const std::vector<Cue>& honorific_cues() {
  static const std::vector<Cue> cues = [] {
    std::vector<Cue> out;
    for (const char32_t* h : {U"C.B.E.", U"C.M.G.", U"I.S.O.", U"J.B.E.", U"J.P.", U"K.B.E.",
                              U"L.V.O.", U"O.B.E.", U"M.B.E.", U"Q.C."}) {
      out.push_back({h, h});
    }
    return out;
  }();
  return cues;
}

const std::vector<Cue>& calendar_cues() {
  static const std::vector<Cue> cues = {
      {U"January", U"一月"},     {U"February", U"二月"},   {U"March", U"三月"},
      {U"April", U"四月"},       {U"May", U"五月"},        {U"June", U"六月"},
      {U"July", U"七月"},        {U"August", U"八月"},     {U"September", U"九月"},
      {U"October", U"十月"},     {U"November", U"十一月"}, {U"December", U"十二月"},
      {U"Monday", U"星期一"},    {U"Tuesday", U"星期二"},  {U"Wednesday", U"星期三"},
      {U"Thursday", U"星期四"},  {U"Friday", U"星期五"},   {U"Saturday", U"星期六"},
      {U"Sunday", U"星期日"},
  };
  return cues;
}

bool has_line_break(std::u32string_view s) {
  return s.find_first_of(U"\n\r") != std::u32string_view::npos;
}

}  // namespace

CueLexicon::CueLexicon(std::vector<Cue> cues, double variance)
    : cues_(std::move(cues)), variance_(variance) {
  if (!(variance_ > 0.0) || !std::isfinite(variance_)) {
    throw std::invalid_argument("cue lexicon variance must be positive");
  }
  for (std::size_t k = 0; k < cues_.size(); ++k) {
    const Cue& cue = cues_[k];
    if (cue.english.empty() || cue.chinese.empty()) {
      throw std::invalid_argument("cue " + std::to_string(k) + " has an empty pattern");
    }
    if (has_line_break(cue.english) || has_line_break(cue.chinese)) {
      throw std::invalid_argument("cue " + std::to_string(k) + " contains a line break");
    }
  }
}

CueLexicon CueLexicon::builtin() {
  std::vector<Cue> cues{{U"governor", U"總督"}};
  cues.insert(cues.end(), honorific_cues().begin(), honorific_cues().end());
  cues.insert(cues.end(), calendar_cues().begin(), calendar_cues().end());
  return CueLexicon(std::move(cues));
}

CueLexicon CueLexicon::builtin_paragraph() {
  return CueLexicon({{U":", U":"}, {U"governor", U"總督"}});
}

CueLexicon CueLexicon::builtin_sentence() {
  std::vector<Cue> cues = honorific_cues();
  cues.insert(cues.end(), calendar_cues().begin(), calendar_cues().end());
  return CueLexicon(std::move(cues));
}

std::size_t count_occurrences(std::u32string_view text, std::u32string_view pattern) {
  if (pattern.empty()) return 0;
  std::size_t n = 0;
  for (std::size_t pos = text.find(pattern); pos != std::u32string_view::npos;
       pos = text.find(pattern, pos + pattern.size())) {
    ++n;
  }
  return n;
}

std::vector<int> count_cues(std::span<const Passage> passages, const CueLexicon& lexicon,
                            Language side) {
  std::u32string joined;
  for (std::size_t i = 0; i < passages.size(); ++i) {
    if (i > 0) joined.push_back(U'\n');
    joined += passages[i].text();
  }
  std::vector<int> counts;
  counts.reserve(lexicon.size());
  for (const Cue& cue : lexicon.cues()) {
    const std::u32string& pattern = side == Language::english ? cue.english : cue.chinese;
    counts.push_back(static_cast<int>(count_occurrences(joined, pattern)));
  }
  return counts;
}

double lexical_cost(std::span<const int> v, std::span<const int> w, const CueLexicon& lexicon,
                    double probability_floor) {
  if (v.size() != lexicon.size() || w.size() != lexicon.size()) {
    throw std::invalid_argument("lexical_cost: count vectors must match the lexicon size");
  }
  const double sd = std::sqrt(lexicon.variance());
  double cost = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    int diff = w[k] - v[k];
    if (diff == 0) continue;
    cost += floored_neg_log(two_tailed_probability(diff / sd), probability_floor);
  }
  return cost;
}

double combined_cost(const Bead& bead, const Document& english, const Document& chinese,
                     const LengthModelParams& params, const CueLexicon& lexicon) {
  if (bead.eng.end > english.size() || bead.chi.end > chinese.size()) {
    throw std::out_of_range("combined_cost: bead lies outside the documents");
  }
  double cost = match_cost(range_length(english, bead.eng), range_length(chinese, bead.chi),
                           bead.cls, params);
  if (lexicon.empty()) return cost;
  std::span<const Passage> e(english.passages().data() + bead.eng.begin, bead.eng.size());
  std::span<const Passage> c(chinese.passages().data() + bead.chi.begin, bead.chi.size());
  auto v = count_cues(e, lexicon, Language::english);
  auto w = count_cues(c, lexicon, Language::chinese);
  return cost + lexical_cost(v, w, lexicon, params.probability_floor);
}

CuePrefixCounts::CuePrefixCounts(const Document& doc, const CueLexicon& lexicon, Language side)
    : cues_(lexicon.size()), passages_(doc.size()), prefix_(cues_ * (passages_ + 1), 0) {
  const std::size_t stride = passages_ + 1;
  for (std::size_t k = 0; k < cues_; ++k) {
    const Cue& cue = lexicon.cues()[k];
    const std::u32string& pattern = side == Language::english ? cue.english : cue.chinese;
    int* row = prefix_.data() + k * stride;
    for (std::size_t i = 0; i < passages_; ++i) {
      row[i + 1] = row[i] + static_cast<int>(count_occurrences(doc[i].text(), pattern));
    }
  }
}

}  // namespace bitext
