#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "bitext/corpus.hpp"
#include "bitext/length_model.hpp"
#include "bitext/lexical_model.hpp"

namespace bitext {

/// A run of equal-length passages at the start of the corpus, such as a
/// roll-call of members, containing one perturbation bead and followed by an
/// optional boundary bead. Every passage in the stretch and boundary has the
/// same length on its side, so the perturbation and boundary beads are the
/// only places where the lengths disagree with the bead shape.
struct HeaderStretch {
  /// English passages in the stretch, perturbation included.
  std::size_t length = 40;
  BeadClass perturbation{2, 1};
  /// Index of the perturbation among the stretch beads.
  std::size_t perturbation_index = 0;
  /// Bead emitted right after the stretch.
  std::optional<BeadClass> boundary = BeadClass{1, 2};
  /// Hybrid length of every English stretch passage; Chinese passages get
  /// round(c * english_length).
  HybridLength english_length = 40;
};

struct CueInjection {
  CueLexicon lexicon = CueLexicon::builtin_sentence();
  /// Probability that an ordinary bead with both sides non-empty carries a
  /// matched cue. Every header-stretch bead carries one.
  double rate = 0.0;
};

/// Default bead priors rescaled to sum to 1.
std::map<BeadClass, double> default_class_mix();

struct GenConfig {
  double c = kDefaultC;
  double sigma = kDefaultSigma;
  std::map<BeadClass, double> class_mix = default_class_mix();
  std::size_t n_beads = 500;
  std::uint64_t seed = 1;
  /// English passage lengths are drawn uniformly from this closed range.
  HybridLength min_english_length = 20;
  HybridLength max_english_length = 200;
  std::optional<HeaderStretch> header_stretch;
  std::optional<CueInjection> cue_injection;

  /// Throws std::invalid_argument on a bad configuration.
  void validate() const;
};

struct GeneratedCorpus {
  Document english;
  Document chinese;
  Alignment gold;
  /// The first header_beads gold beads form the header stretch; the boundary
  /// bead, when configured, follows them.
  std::size_t header_beads = 0;
};

/// Samples a parallel corpus from the length model: per bead, English lengths
/// from the configured range and a Chinese total of
/// round(c*l1 + sqrt(l1)*sigma*eps), eps standard normal, at least 1 per
/// Chinese passage. Passage texts are filler of the right character widths.
/// Deterministic for a given config.
GeneratedCorpus generate(const GenConfig& cfg);

}  // namespace bitext
