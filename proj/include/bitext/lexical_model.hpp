#pragma once

#include <span>
#include <string>
#include <vector>

#include "bitext/corpus.hpp"
#include "bitext/length_model.hpp"

namespace bitext {

inline constexpr double kDefaultCueVariance = 0.07;

struct Cue {
  std::u32string english;
  std::u32string chinese;
};

/// Bilingual cue pairs whose occurrence counts should balance across a
/// correct bead. All cues share one variance.
class CueLexicon {
 public:
  CueLexicon() = default;
  /// Throws std::invalid_argument for empty patterns, patterns containing
  /// line breaks, or a non-positive variance.
  explicit CueLexicon(std::vector<Cue> cues, double variance = kDefaultCueVariance);

  const std::vector<Cue>& cues() const { return cues_; }
  double variance() const { return variance_; }
  std::size_t size() const { return cues_.size(); }
  bool empty() const { return cues_.empty(); }

  /// Months, weekdays, honorific abbreviations and governor/總督.
  static CueLexicon builtin();
  /// The short lexicon used to align paragraphs: the speaker colon and governor/總督.
  static CueLexicon builtin_paragraph();
  /// Honorifics, months and weekdays.
  static CueLexicon builtin_sentence();

 private:
  std::vector<Cue> cues_;
  double variance_ = kDefaultCueVariance;
};

/// Non-overlapping literal occurrences of pattern in text.
std::size_t count_occurrences(std::u32string_view text, std::u32string_view pattern);

/// Per-cue counts over the passages' texts joined by a line break (patterns
/// cannot contain one, so no match spans two passages). side selects which
/// pattern column is counted.
std::vector<int> count_cues(std::span<const Passage> passages, const CueLexicon& lexicon,
                            Language side);

/// Sum over cues of -log Pr(w_i - v_i | match), where the difference is
/// standardized by the lexicon's variance and scored two-tailed, floored at
/// probability_floor. Throws std::invalid_argument on size mismatch.
double lexical_cost(std::span<const int> v, std::span<const int> w, const CueLexicon& lexicon,
                    double probability_floor = kDefaultProbabilityFloor);

/// match_cost + lexical_cost for the bead, with counts taken over the bead's
/// passages on each side.
double combined_cost(const Bead& bead, const Document& english, const Document& chinese,
                     const LengthModelParams& params, const CueLexicon& lexicon);

/// Per-passage cue counts with prefix sums, so a side's counts for any
/// passage range come out in O(cues).
class CuePrefixCounts {
 public:
  CuePrefixCounts() = default;
  CuePrefixCounts(const Document& doc, const CueLexicon& lexicon, Language side);

  /// Count of cue k over passages [begin, end).
  int count(std::size_t cue, std::size_t begin, std::size_t end) const {
    const std::size_t stride = passages_ + 1;
    return prefix_[cue * stride + end] - prefix_[cue * stride + begin];
  }
  std::size_t cues() const { return cues_; }

 private:
  std::size_t cues_ = 0;
  std::size_t passages_ = 0;
  std::vector<int> prefix_;  // cue-major, passages_ + 1 entries per cue
};

}  // namespace bitext
