#include <cmath>
#include <random>
#include <vector>

#include "bitext/length_model.hpp"
#include "doctest.h"

using namespace bitext;

namespace {

std::vector<LengthPair> model_pairs(std::size_t n, std::uint64_t seed, double c, double sigma) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<HybridLength> len(20, 200);
  std::normal_distribution<double> eps;
  std::vector<LengthPair> out;
  for (std::size_t k = 0; k < n; ++k) {
    const HybridLength l1 = len(rng);
    const double l2 = c * static_cast<double>(l1) + std::sqrt(static_cast<double>(l1)) * sigma * eps(rng);
    out.push_back({l1, std::max<HybridLength>(1, std::llround(l2))});
  }
  return out;
}

}  // namespace

TEST_SUITE("length_model") {
  TEST_CASE("default priors") {
    LengthModelParams p;
    CHECK(p.prior({0, 1}) == 0.0099);
    CHECK(p.prior({1, 0}) == 0.0099);
    CHECK(p.prior({1, 1}) == 0.89);
    CHECK(p.prior({1, 2}) == 0.089);
    CHECK(p.prior({2, 1}) == 0.089);
    CHECK(p.prior({2, 2}) == 0.011);
    double sum = 0.0;
    for (const auto& [cls, pr] : p.priors) sum += pr;
    CHECK(sum == doctest::Approx(1.0988).epsilon(1e-12));
    double norm = 0.0;
    for (const auto& [cls, pr] : p.with_normalized_priors().priors) norm += pr;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.c == 0.506);
    CHECK(p.sigma2 == doctest::Approx(0.027556).epsilon(1e-12));
  }

  TEST_CASE("estimate_params examples") {
    std::vector<LengthPair> exact{{10, 5}, {20, 10}};
    auto p = estimate_params(exact);
    CHECK(p.c == doctest::Approx(0.5));
    CHECK(p.sigma2 == doctest::Approx(0.0));

    std::vector<LengthPair> spread{{100, 40}, {100, 60}};
    p = estimate_params(spread);
    CHECK(p.c == doctest::Approx(0.5));
    CHECK(p.sigma2 == doctest::Approx(1.0));

    CHECK_THROWS(estimate_params(std::vector<LengthPair>{}));
    CHECK_THROWS(estimate_params(std::vector<LengthPair>{{0, 3}}));
  }

  TEST_CASE("estimate_params recovers generating parameters") {
    auto pairs = model_pairs(10000, 11, 0.506, 0.166);
    auto p = estimate_params(pairs);
    CHECK(std::abs(p.c - 0.506) <= 0.01);
    CHECK(std::abs(std::sqrt(p.sigma2) - 0.166) <= 0.02);
  }

  TEST_CASE("estimate_params is consistent") {
    double small = 0.0, large = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      small += std::abs(estimate_params(model_pairs(100, seed, 0.506, 0.3)).c - 0.506);
      large += std::abs(estimate_params(model_pairs(10000, seed, 0.506, 0.3)).c - 0.506);
    }
    CHECK(large < small);
  }

  TEST_CASE("delta examples") {
    LengthModelParams p;
    CHECK(delta(100, 50.6, p) == doctest::Approx(0.0));
    CHECK(delta(100, 67.2, p) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(delta(1, 0, p) == doctest::Approx(-0.506 / 0.166).epsilon(1e-12));
    CHECK(delta(1, 0, p) == doctest::Approx(-3.048).epsilon(1e-3));
    CHECK_THROWS_AS(delta(0, 3, p), std::domain_error);
  }

  TEST_CASE("delta antisymmetry") {
    LengthModelParams p;
    for (double l1 : {1.0, 7.0, 55.0, 300.0}) {
      for (double d : {0.5, 3.0, 17.25}) {
        CHECK(delta(l1, l1 * p.c + d, p) == doctest::Approx(-delta(l1, l1 * p.c - d, p)));
      }
    }
  }

  TEST_CASE("match_cost examples") {
    LengthModelParams p;
    p.c = 0.5;
    CHECK(match_cost(100, 50, {1, 1}, p) == doctest::Approx(0.1165).epsilon(1e-3));
    CHECK(match_cost(100, 50, {1, 1}, p) == doctest::Approx(-std::log(0.89)));
    CHECK(match_cost(100, 50, {2, 2}, p) == doctest::Approx(4.5099).epsilon(1e-4));
    CHECK_THROWS(match_cost(100, 50, {3, 1}, p));
  }

  TEST_CASE("match_cost monotonicity") {
    LengthModelParams p;
    double prev = match_cost(100, 51, {1, 1}, p);
    for (HybridLength l2 = 52; l2 < 68; ++l2) {  // below the probability floor
      const double cur = match_cost(100, l2, {1, 1}, p);
      CHECK(cur > prev);
      prev = cur;
    }
    // For fixed delta, cost rises as the prior falls.
    CHECK(match_cost(100, 55, {1, 1}, p) < match_cost(100, 55, {1, 2}, p));
    CHECK(match_cost(100, 55, {1, 2}, p) == doctest::Approx(match_cost(100, 55, {2, 1}, p)));
    CHECK(match_cost(100, 55, {2, 1}, p) < match_cost(100, 55, {2, 2}, p));
    CHECK(match_cost(100, 55, {2, 2}, p) < match_cost(100, 55, {0, 1}, p) + 100.0);
  }

  TEST_CASE("probability floor keeps costs finite") {
    LengthModelParams p;
    const double cost = match_cost(10, 5000, {1, 1}, p);
    CHECK(std::isfinite(cost));
    CHECK(cost == doctest::Approx(-std::log(1e-30) - std::log(0.89)));
  }

  TEST_CASE("deletion and insertion use a clamped English length") {
    LengthModelParams p;
    CHECK(bead_delta(0, 30, {0, 1}, p) == doctest::Approx(delta(1, 30, p)));
    CHECK(bead_delta(30, 0, {1, 0}, p) == doctest::Approx(delta(1, 30, p)));
    CHECK(match_cost(1, 0, {1, 0}, p) < match_cost(50, 0, {1, 0}, p));
  }

  TEST_CASE("density form") {
    LengthModelParams p;
    p.c = 0.5;
    p.form = MatchProbability::density;
    CHECK(match_cost(100, 50, {1, 1}, p) ==
          doctest::Approx(0.5 * std::log(2.0 * M_PI) - std::log(0.89)));
    CHECK(match_cost(100, 60, {1, 1}, p) > match_cost(100, 50, {1, 1}, p));
  }

  TEST_CASE("params validation") {
    LengthModelParams p;
    p.sigma2 = 0.0;
    CHECK_THROWS(p.validate());
    p = {};
    p.priors.erase({2, 2});
    CHECK_THROWS(p.validate());
    p = {};
    p.priors[{1, 0}] = 0.0;
    CHECK_THROWS(p.validate());
  }

  TEST_CASE("normal tail helpers") {
    CHECK(two_tailed_probability(0.0) == 1.0);
    CHECK(two_tailed_probability(1.959963984540054) == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
    CHECK(floored_neg_log(0.0, 1e-30) == doctest::Approx(-std::log(1e-30)));
  }
}
