#pragma once

#include <map>
#include <span>
#include <utility>

#include "bitext/corpus.hpp"

namespace bitext {

/// How Pr(delta | match) is obtained from the standard normal.
enum class MatchProbability {
  two_tailed,  ///< 2 * (1 - Phi(|delta|))
  density,     ///< phi(delta)
};

inline constexpr double kDefaultC = 0.506;
inline constexpr double kDefaultSigma = 0.166;
inline constexpr double kDefaultProbabilityFloor = 1e-30;

/// Default bead-class priors for the length-based method. They sum to
/// 1.0988; only relative costs matter to the search.
std::map<BeadClass, double> default_priors();

struct LengthModelParams {
  double c = kDefaultC;
  double sigma2 = kDefaultSigma * kDefaultSigma;
  std::map<BeadClass, double> priors = default_priors();
  MatchProbability form = MatchProbability::two_tailed;
  double probability_floor = kDefaultProbabilityFloor;

  /// Throws std::invalid_argument unless c > 0, sigma2 > 0, the floor lies in
  /// (0, 1) and every producible class has a positive prior.
  void validate() const;

  /// Copy with priors rescaled to sum to 1.
  LengthModelParams with_normalized_priors() const;

  double prior(BeadClass cls) const;
};

struct LengthPair {
  HybridLength l1;
  HybridLength l2;
};

/// c = sum(l2) / sum(l1); sigma2 = mean over pairs of (l2 - c*l1)^2 / l1.
/// Priors keep their defaults. sigma2 may come out 0 for perfectly
/// proportional data, in which case the result fails validate().
/// Throws std::invalid_argument on empty input or l1 < 1.
LengthModelParams estimate_params(std::span<const LengthPair> pairs);

/// (l2 - l1*c) / sqrt(l1 * sigma2). Throws std::domain_error if l1 <= 0 or
/// sigma2 <= 0.
double delta(double l1, double l2, const LengthModelParams& params);

/// Standard normal CDF.
double normal_cdf(double x);

/// 2 * (1 - Phi(|z|)), computed without cancellation.
double two_tailed_probability(double z);

/// -log(max(p, floor)).
double floored_neg_log(double p, double floor);

/// -log Pr(delta | match) - log prior(cls) for a bead whose sides have total
/// hybrid lengths l1 (English) and l2 (Chinese). For 0-1 beads the English
/// length is clamped to 1; for 1-0 beads the English length plays the l2 role
/// against a clamped l1 of 1. Throws std::invalid_argument for classes the
/// model cannot produce.
double match_cost(HybridLength l1, HybridLength l2, BeadClass cls, const LengthModelParams& params);

/// Delta as used by match_cost for the given class (with the clamping above).
double bead_delta(HybridLength l1, HybridLength l2, BeadClass cls, const LengthModelParams& params);

}  // namespace bitext
