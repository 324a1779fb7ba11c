#pragma once

#include <map>
#include <optional>
#include <string>

#include "bitext/corpus.hpp"

namespace bitext {

struct ClassTally {
  std::size_t total = 0;
  std::size_t correct = 0;
  std::size_t incorrect = 0;

  /// correct / total as a fraction; 0 when total is 0.
  double fraction_correct() const {
    return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
  }
};

/// Restricts scoring to beads whose passages all lie inside both ranges.
struct RegionFilter {
  Range eng;
  Range chi;

  bool contains(const Bead& bead) const;
};

struct EvalReport {
  std::size_t gold_beads = 0;
  std::size_t gold_correct = 0;
  /// Fraction of gold beads reproduced exactly (1 when there are none).
  double type1_accuracy = 1.0;

  std::size_t output_one_to_one = 0;
  std::size_t output_one_to_one_correct = 0;
  /// Fraction of output 1-1 beads that are gold 1-1 beads (1 when there are none).
  double type2_precision = 1.0;

  /// Gold-side tallies for every reported class, zero rows included.
  std::map<BeadClass, ClassTally> per_class;
  /// Gold beads of any other shape.
  ClassTally other;

  /// Output beads per class.
  std::map<BeadClass, std::size_t> output_counts;
};

/// Scores output against gold. A gold bead is correct iff the identical bead
/// (class and both ranges) appears in output. Throws std::invalid_argument
/// when the two alignments cover different passage counts.
EvalReport evaluate(const Alignment& output, const Alignment& gold,
                    const std::optional<RegionFilter>& region = std::nullopt);

/// Total / Correct / Incorrect / % Correct rows per class, tab-separated,
/// followed by the Type I and Type II summary lines.
std::string format_report(const EvalReport& report);

}  // namespace bitext
