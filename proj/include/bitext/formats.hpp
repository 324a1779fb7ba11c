#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bitext/corpus.hpp"
#include "bitext/length_model.hpp"
#include "bitext/lexical_model.hpp"

namespace bitext {

/// Malformed input file content; line is 1-based (0 when not line-specific).
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline constexpr std::string_view kAlignmentHeader = "#bitext-align v1";

/// Header line, then one bead per line:
///   a-b<TAB>e_start..e_end<TAB>c_start..c_end
/// with end-exclusive ranges and `-` for an empty side.
std::string write_alignment(const Alignment& al);
/// Accepts any a-b class, including shapes the aligner never produces.
Alignment read_alignment(std::string_view text);

/// key=value lines for c, sigma2 and the six priors; `#` starts a comment.
std::string write_params(const LengthModelParams& params);
/// Missing keys keep their defaults; unknown keys are an error.
LengthModelParams read_params(std::string_view text);

/// english<TAB>chinese per line; `#` comments; an optional `variance=<real>`
/// line overrides the default shared variance.
CueLexicon read_lexicon(std::string_view utf8_text);
std::string write_lexicon(const CueLexicon& lexicon);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

}  // namespace bitext
