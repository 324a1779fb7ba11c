#include <cmath>
#include <vector>

#include "bitext/lexical_model.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bitext;

namespace {

/// Upper normal tail by composite Simpson quadrature of the density.
double upper_tail_quadrature(double z) {
  const int n = 200000;
  const double hi = z + 40.0;
  const double h = (hi - z) / n;
  auto phi = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * M_PI); };
  double s = phi(z) + phi(hi);
  for (int k = 1; k < n; ++k) s += (k % 2 == 1 ? 4.0 : 2.0) * phi(z + k * h);
  return s * h / 3.0;
}

CueLexicon single(std::u32string e, std::u32string c) {
  return CueLexicon({{std::move(e), std::move(c)}});
}

}  // namespace

TEST_SUITE("lexical_model") {
  TEST_CASE("count_occurrences") {
    CHECK(count_occurrences(U"THE HONOURABLE TIK CHI-YUEN", U"J.P.") == 0);
    CHECK(count_occurrences(U"January January", U"January") == 2);
    CHECK(count_occurrences(U"aaaa", U"aa") == 2);
    CHECK(count_occurrences(U"j.p. J.P.", U"J.P.") == 1);
  }

  TEST_CASE("count_cues on a roll-call line") {
    CueLexicon lex({{U"K.B.E.", U"K.B.E."}, {U"L.V.O.", U"L.V.O."}, {U"J.P.", U"J.P."}});
    Document d = testing::doc_of_texts(Language::chinese, {U"¶布政司霍德爵士議員, K.B.E., L.V.O., J.P."});
    CHECK(count_cues(d.passages(), lex, Language::chinese) == std::vector<int>{1, 1, 1});
  }

  TEST_CASE("count_cues spans the bead side") {
    CueLexicon lex = single(U"May", U"五月");
    Document d = testing::doc_of_texts(Language::english, {U"in May", U"and May"});
    CHECK(count_cues(d.passages(), lex, Language::english) == std::vector<int>{2});
  }

  TEST_CASE("lexical_cost examples") {
    CueLexicon lex = single(U"J.P.", U"J.P.");
    std::vector<int> zero{0}, one{1};
    CHECK(lexical_cost(zero, zero, lex) == 0.0);
    CHECK(lexical_cost(one, one, lex) == 0.0);

    const double z = 1.0 / std::sqrt(0.07);
    CHECK(z == doctest::Approx(3.7796).epsilon(1e-4));
    const double oracle = -std::log(2.0 * upper_tail_quadrature(z));
    CHECK(lexical_cost(one, zero, lex) == doctest::Approx(oracle).epsilon(1e-8));
    CHECK(oracle == doctest::Approx(8.7).epsilon(0.01));
    CHECK_THROWS(lexical_cost(std::vector<int>{1, 0}, one, lex));
  }

  TEST_CASE("lexical_cost symmetry, additivity, zero iff equal") {
    CueLexicon lex({{U"a", U"甲"}, {U"b", U"乙"}, {U"c", U"丙"}});
    std::vector<int> v{2, 0, 1}, w{0, 2, 1};
    CHECK(lexical_cost(v, w, lex) == doctest::Approx(lexical_cost(w, v, lex)));
    const double part = lexical_cost(std::vector<int>{2}, std::vector<int>{0}, single(U"a", U"甲"));
    CHECK(lexical_cost(v, w, lex) == doctest::Approx(2.0 * part));
    CHECK(lexical_cost(v, v, lex) == 0.0);
    CHECK(lexical_cost(v, std::vector<int>{2, 0, 2}, lex) > 0.0);
  }

  TEST_CASE("combined_cost") {
    LengthModelParams p;
    Document e = testing::doc_of_texts(Language::english, {U"The Governor said so on Monday."});
    Document c1 = testing::doc_of_texts(Language::chinese, {U"總督星期一這樣說。"});
    Document c2 = testing::doc_of_texts(Language::chinese, {U"他在星期一這樣說。"});
    Bead bead = Bead::at({1, 1}, 0, 0);
    const double length_only = match_cost(e[0].length(), c1[0].length(), {1, 1}, p);
    CHECK(combined_cost(bead, e, c1, p, CueLexicon{}) == length_only);
    CueLexicon lex({{U"Governor", U"總督"}, {U"Monday", U"星期一"}});
    CHECK(combined_cost(bead, e, c1, p, lex) == doctest::Approx(length_only));
    const double one_sided = combined_cost(bead, e, c2, p, lex);
    CHECK(one_sided > match_cost(e[0].length(), c2[0].length(), {1, 1}, p));
  }

  TEST_CASE("prefix counts match direct counts") {
    CueLexicon lex = CueLexicon::builtin();
    Document d = testing::doc_of_texts(
        Language::english, {U"J.P. and C.B.E.", U"nothing", U"Monday, May and J.P.", U"J.P."});
    CuePrefixCounts pc(d, lex, Language::english);
    for (std::size_t b = 0; b <= d.size(); ++b) {
      for (std::size_t e = b; e <= d.size(); ++e) {
        auto direct = count_cues(std::span(d.passages()).subspan(b, e - b), lex, Language::english);
        for (std::size_t k = 0; k < lex.size(); ++k) CHECK(pc.count(k, b, e) == direct[k]);
      }
    }
  }

  TEST_CASE("builtin lexicons") {
    CHECK(CueLexicon::builtin_paragraph().size() == 2);
    CHECK(CueLexicon::builtin_paragraph().cues()[1].chinese == U"總督");
    CHECK(CueLexicon::builtin_sentence().size() == 10 + 12 + 7);
    CHECK(CueLexicon::builtin().size() == 30);
    CHECK(CueLexicon::builtin().variance() == 0.07);
    CHECK_THROWS(CueLexicon(std::vector<Cue>{{U"", U"x"}}));
    CHECK_THROWS(CueLexicon(std::vector<Cue>{{U"a", U"b"}}, 0.0));
  }
}
