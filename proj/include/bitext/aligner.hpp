#pragma once

#include <cstddef>

#include "bitext/corpus.hpp"
#include "bitext/length_model.hpp"
#include "bitext/lexical_model.hpp"

namespace bitext {

/// Bead costs are rounded to a multiple of 2^-24 before they are summed. Sums
/// of such values are exact, so equal-cost alignments tie exactly no matter
/// the order of accumulation and the tie-break order alone decides.
double snap_cost(double cost);

/// Minimum-cost monotone alignment over the six producible bead classes.
/// Equal-cost choices are resolved by kProducibleClasses order, applied from
/// the end of the documents backwards. Validates params first.
Alignment align(const Document& english, const Document& chinese, const LengthModelParams& params);
Alignment align(const Document& english, const Document& chinese, const LengthModelParams& params,
                const CueLexicon& lexicon);

/// Same as align, restricted to cells with |i*n2/n1 - j| <= band. Falls back to
/// the full table when the band covers it or leaves no complete path.
Alignment align_banded(const Document& english, const Document& chinese,
                       const LengthModelParams& params, const CueLexicon& lexicon,
                       std::size_t band);

inline constexpr std::size_t kBruteforceLimit = 8;

/// Enumerates every alignment and returns the cheapest, with the same tie rule
/// as align. Bead costs come from combined_cost. Throws std::length_error when
/// either document exceeds kBruteforceLimit passages.
Alignment align_bruteforce(const Document& english, const Document& chinese,
                           const LengthModelParams& params, const CueLexicon& lexicon);

/// Two-pass alignment: paragraphs first (each paragraph scored as one passage,
/// with paragraph_lexicon), then passages inside each aligned paragraph group
/// with sentence_lexicon. total_cost is the sum of the passage-level costs.
Alignment align_anchored(const Document& english, const Document& chinese,
                         const LengthModelParams& params, const CueLexicon& paragraph_lexicon,
                         const CueLexicon& sentence_lexicon);

/// Collapses each paragraph of doc into a single passage (texts joined by a space).
Document paragraph_document(const Document& doc);

}  // namespace bitext
