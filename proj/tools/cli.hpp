#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bitext/corpus.hpp"
#include "bitext/length_model.hpp"

namespace bitext::cli {

/// Runs one command line (without the program name). Data goes to files or
/// `out`; diagnostics go to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct DeltaSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
};

/// Delta of every gold bead with both sides non-empty, in bead order.
std::vector<double> gold_deltas(const Alignment& gold, const Document& english,
                                const Document& chinese, const LengthModelParams& params);

DeltaSummary summarize(const std::vector<double>& values);

}  // namespace bitext::cli
