#include "bitext/evaluator.hpp"
#include "doctest.h"

using namespace bitext;

namespace {

/// Gold of n 1-1 beads, output identical except that `wrong` of them are
/// replaced by a 2-2 bead over two consecutive pairs.
std::pair<Alignment, Alignment> with_errors(std::size_t n, std::size_t wrong_pairs) {
  Alignment gold, out;
  for (std::size_t k = 0; k < n; ++k) gold.beads.push_back(Bead::at({1, 1}, k, k));
  for (std::size_t k = 0; k < n;) {
    if (k / 2 < wrong_pairs && k + 1 < n) {
      out.beads.push_back(Bead::at({2, 2}, k, k));
      k += 2;
    } else {
      out.beads.push_back(Bead::at({1, 1}, k, k));
      ++k;
    }
  }
  return {out, gold};
}

}  // namespace

TEST_SUITE("evaluator") {
  TEST_CASE("identical alignments are all correct") {
    auto [out, gold] = with_errors(10, 0);
    EvalReport r = evaluate(gold, gold);
    CHECK(r.type1_accuracy == 1.0);
    CHECK(r.type2_precision == 1.0);
    CHECK(r.per_class.at({1, 1}).total == 10);
    CHECK(r.per_class.at({1, 1}).incorrect == 0);
  }

  TEST_CASE("type I and type II counts") {
    auto [out, gold] = with_errors(10, 2);
    EvalReport r = evaluate(out, gold);
    CHECK(r.gold_beads == 10);
    CHECK(r.gold_correct == 6);
    CHECK(r.type1_accuracy == doctest::Approx(0.6));
    CHECK(r.output_one_to_one == 6);
    CHECK(r.output_one_to_one_correct == 6);
    CHECK(r.type2_precision == 1.0);
    CHECK(r.output_counts.at({2, 2}) == 2);
    CHECK(r.output_one_to_one_correct <= std::min<std::size_t>(r.output_one_to_one, 10));
  }

  TEST_CASE("type II counts only output 1-1 beads") {
    Alignment gold, out;
    gold.beads = {Bead::at({2, 1}, 0, 0), Bead::at({1, 1}, 2, 1)};
    out.beads = {Bead::at({1, 1}, 0, 0), Bead::at({1, 0}, 1, 1), Bead::at({1, 1}, 2, 1)};
    EvalReport r = evaluate(out, gold);
    CHECK(r.output_one_to_one == 2);
    CHECK(r.output_one_to_one_correct == 1);
    CHECK(r.type2_precision == doctest::Approx(0.5));
    CHECK(r.per_class.at({2, 1}).incorrect == 1);
  }

  TEST_CASE("larger gold classes and other") {
    Alignment gold, out;
    gold.beads = {Bead::at({3, 1}, 0, 0), Bead::at({4, 1}, 3, 1)};
    out.beads = {Bead::at({2, 1}, 0, 0), Bead::at({1, 1}, 2, 1), Bead::at({1, 0}, 3, 2),
                 Bead::at({3, 0}, 4, 2)};
    EvalReport r = evaluate(out, gold);
    CHECK(r.per_class.at({3, 1}).total == 1);
    CHECK(r.per_class.at({3, 1}).correct == 0);
    CHECK(r.other.total == 1);
    CHECK(r.type1_accuracy == 0.0);
  }

  TEST_CASE("mismatched documents") {
    Alignment a, b;
    a.beads = {Bead::at({1, 1}, 0, 0)};
    b.beads = {Bead::at({2, 1}, 0, 0)};
    CHECK_THROWS_AS(evaluate(a, b), std::invalid_argument);
  }

  TEST_CASE("region filter excludes outside beads") {
    auto [out, gold] = with_errors(10, 2);
    RegionFilter tail{{4, 10}, {4, 10}};
    EvalReport r = evaluate(out, gold, tail);
    CHECK(r.gold_beads == 6);
    CHECK(r.type1_accuracy == 1.0);
    RegionFilter head{{0, 4}, {0, 4}};
    r = evaluate(out, gold, head);
    CHECK(r.gold_beads == 4);
    CHECK(r.type1_accuracy == 0.0);
    CHECK(r.output_one_to_one == 0);
    CHECK(r.type2_precision == 1.0);
  }

  TEST_CASE("report table layout") {
    auto [out, gold] = with_errors(4, 1);
    const std::string text = format_report(evaluate(out, gold));
    CHECK(text.starts_with("bead\t1-1\t1-2\t2-1\t2-2\t1-3\t3-1\t3-3\n"));
    CHECK(text.find("Total\t4\t0") != std::string::npos);
    CHECK(text.find("% Correct\t50.0\t0.0") != std::string::npos);
    CHECK(text.find("Type I: 2/4 = 50.0%\n") != std::string::npos);
    CHECK(text.find("Type II: 2/2 = 100.0%\n") != std::string::npos);
  }
}
