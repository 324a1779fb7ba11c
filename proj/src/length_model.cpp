#include "bitext/length_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bitext {

std::map<BeadClass, double> default_priors() {
  return {{{0, 1}, 0.0099}, {{1, 0}, 0.0099}, {{1, 1}, 0.89},
          {{1, 2}, 0.089},  {{2, 1}, 0.089},  {{2, 2}, 0.011}};
}

void LengthModelParams::validate() const {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw std::invalid_argument("length model: c must be positive, got " + std::to_string(c));
  }
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw std::invalid_argument("length model: sigma2 must be positive, got " +
                                std::to_string(sigma2));
  }
  if (!(probability_floor > 0.0 && probability_floor < 1.0)) {
    throw std::invalid_argument("length model: probability floor must lie in (0, 1)");
  }
  for (BeadClass cls : kProducibleClasses) {
    auto it = priors.find(cls);
    if (it == priors.end() || !(it->second > 0.0)) {
      throw std::invalid_argument("length model: missing or non-positive prior for " +
                                  to_string(cls));
    }
  }
}

LengthModelParams LengthModelParams::with_normalized_priors() const {
  LengthModelParams out = *this;
  double total = 0.0;
  for (const auto& [cls, p] : priors) total += p;
  if (total > 0.0) {
    for (auto& [cls, p] : out.priors) p /= total;
  }
  return out;
}

double LengthModelParams::prior(BeadClass cls) const {
  auto it = priors.find(cls);
  if (it == priors.end()) throw std::invalid_argument("no prior for class " + to_string(cls));
  return it->second;
}

LengthModelParams estimate_params(std::span<const LengthPair> pairs) {
  if (pairs.empty()) throw std::invalid_argument("estimate_params: no training pairs");
  double sum1 = 0.0;
  double sum2 = 0.0;
  for (const LengthPair& p : pairs) {
    if (p.l1 < 1) throw std::invalid_argument("estimate_params: English length must be >= 1");
    sum1 += static_cast<double>(p.l1);
    sum2 += static_cast<double>(p.l2);
  }
  LengthModelParams out;
  out.c = sum2 / sum1;
  double acc = 0.0;
  for (const LengthPair& p : pairs) {
    double r = static_cast<double>(p.l2) - out.c * static_cast<double>(p.l1);
    acc += r * r / static_cast<double>(p.l1);
  }
  out.sigma2 = acc / static_cast<double>(pairs.size());
  return out;
}

double delta(double l1, double l2, const LengthModelParams& params) {
  if (!(l1 > 0.0)) throw std::domain_error("delta: English length must be positive");
  if (!(params.sigma2 > 0.0)) throw std::domain_error("delta: sigma2 must be positive");
  return (l2 - l1 * params.c) / std::sqrt(l1 * params.sigma2);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double two_tailed_probability(double z) { return std::erfc(std::abs(z) / std::numbers::sqrt2); }

double floored_neg_log(double p, double floor) { return -std::log(std::max(p, floor)); }

double bead_delta(HybridLength l1, HybridLength l2, BeadClass cls, const LengthModelParams& params) {
  if (!is_producible(cls)) {
    throw std::invalid_argument("bead class " + to_string(cls) + " is not producible");
  }
  if (cls.b == 0) {
    // Deletion: the English side stands in for l2 against a unit-length source.
    return delta(1.0, static_cast<double>(l1), params);
  }
  return delta(static_cast<double>(std::max<HybridLength>(l1, 1)), static_cast<double>(l2), params);
}

double match_cost(HybridLength l1, HybridLength l2, BeadClass cls, const LengthModelParams& params) {
  double d = bead_delta(l1, l2, cls, params);
  double p = params.form == MatchProbability::two_tailed
                 ? two_tailed_probability(d)
                 : std::exp(-0.5 * d * d) / std::sqrt(2.0 * std::numbers::pi);
  return floored_neg_log(p, params.probability_floor) - std::log(params.prior(cls));
}

}  // namespace bitext
