#include "bitext/corpus.hpp"
#include "bitext/formats.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bitext;

namespace {

Alignment beads(std::initializer_list<Bead> list) {
  Alignment al;
  al.beads = list;
  return al;
}

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("passage caches hybrid length") {
    Passage p(0, U"李華明 MR");
    CHECK(p.length() == 9);
  }

  TEST_CASE("document invariants") {
    Document d = testing::doc_of_lengths(Language::english, {3, 4, 5});
    CHECK(d.size() == 3);
    CHECK(d.paragraph_breaks() == std::vector<std::size_t>{0});
    CHECK_THROWS(Document(Language::english, {Passage(1, U"a")}, {0}));
    CHECK_THROWS(Document(Language::english, {Passage(0, U"a")}, {}));
    CHECK_THROWS(Document(Language::english, {Passage(0, U"a")}, {0, 3}));
    CHECK_THROWS(Document(Language::english, {Passage(0, U"")}, {0}));
  }

  TEST_CASE("paragraphs and slices") {
    DocumentBuilder b(Language::english);
    b.add(U"a");
    b.add(U"b");
    b.begin_paragraph();
    b.add(U"c");
    Document d = std::move(b).build();
    auto paras = d.paragraphs();
    REQUIRE(paras.size() == 2);
    CHECK(paras[0] == std::pair<std::size_t, std::size_t>{0, 2});
    CHECK(paras[1] == std::pair<std::size_t, std::size_t>{2, 3});
    Document s = d.slice(1, 3);
    CHECK(s.size() == 2);
    CHECK(s[0].id() == 0);
    CHECK(s[1].text() == U"c");
    CHECK(s.paragraph_breaks() == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("validate_alignment examples") {
    CHECK_FALSE(validate_alignment(beads({Bead::at({1, 1}, 0, 0)}), 1, 1));
    CHECK_FALSE(validate_alignment(Alignment{}, 0, 0));
    auto v = validate_alignment(beads({Bead{{1, 1}, {0, 1}, {0, 1}}, Bead{{1, 1}, {0, 1}, {1, 2}}}), 2, 2);
    REQUIRE(v);
    CHECK(v->bead_index == 1);
  }

  TEST_CASE("validate_alignment failure kinds") {
    CHECK(validate_alignment(beads({Bead::at({1, 1}, 0, 0)}), 2, 1));
    CHECK(validate_alignment(beads({Bead{{0, 0}, {0, 0}, {0, 0}}}), 0, 0));
    CHECK(validate_alignment(beads({Bead{{2, 1}, {0, 1}, {0, 1}}}), 1, 1));
    CHECK(validate_alignment(beads({Bead::at({1, 1}, 0, 0), Bead::at({1, 1}, 1, 1)}), 1, 2));
  }

  TEST_CASE("coverage sums and concatenation") {
    Alignment left = beads({Bead::at({1, 2}, 0, 0), Bead::at({0, 1}, 1, 2)});
    Alignment right = beads({Bead::at({2, 1}, 1, 3), Bead::at({1, 0}, 3, 4)});
    CHECK_FALSE(validate_alignment(left, 1, 3));
    Alignment whole = left;
    whole.beads.insert(whole.beads.end(), right.beads.begin(), right.beads.end());
    CHECK_FALSE(validate_alignment(whole, 4, 4));
    std::size_t sa = 0, sb = 0;
    for (const Bead& b : whole.beads) {
      sa += static_cast<std::size_t>(b.cls.a);
      sb += static_cast<std::size_t>(b.cls.b);
    }
    CHECK(sa == 4);
    CHECK(sb == 4);
  }

  TEST_CASE("bead classes") {
    CHECK(is_producible({1, 1}));
    CHECK_FALSE(is_producible({1, 3}));
    CHECK(tie_rank({1, 1}) < tie_rank({1, 2}));
    CHECK(tie_rank({2, 2}) < tie_rank({0, 1}));
    CHECK(tie_rank({0, 1}) < tie_rank({1, 0}));
    CHECK_THROWS(tie_rank({3, 1}));
    CHECK(to_string(BeadClass{2, 1}) == "2-1");
  }
}

TEST_SUITE("formats") {
  TEST_CASE("alignment file is bit-exact") {
    Alignment al = beads({Bead::at({1, 1}, 0, 0), Bead::at({0, 1}, 1, 1), Bead::at({2, 1}, 1, 2),
                          Bead::at({1, 0}, 3, 3)});
    const std::string text = write_alignment(al);
    CHECK(text ==
          "#bitext-align v1\n"
          "1-1\t0..1\t0..1\n"
          "0-1\t-\t1..2\n"
          "2-1\t1..3\t2..3\n"
          "1-0\t3..4\t-\n");
    CHECK(read_alignment(text).beads == al.beads);
  }

  TEST_CASE("alignment file accepts larger gold classes") {
    Alignment al = read_alignment("#bitext-align v1\n3-1\t0..3\t0..1\n1-3\t3..4\t1..4\n");
    REQUIRE(al.beads.size() == 2);
    CHECK(al.beads[1].cls == BeadClass{1, 3});
  }

  TEST_CASE("alignment file errors") {
    CHECK_THROWS_AS(read_alignment("1-1\t0..1\t0..1\n"), FormatError);
    CHECK_THROWS_AS(read_alignment("#bitext-align v1\n1-1\t0..2\t0..1\n"), FormatError);
    CHECK_THROWS_AS(read_alignment("#bitext-align v1\n1-1 0..1 0..1\n"), FormatError);
    CHECK_THROWS_AS(read_alignment("#bitext-align v1\n0-0\t-\t-\n"), FormatError);
    try {
      read_alignment("#bitext-align v1\n1-1\t0..1\t0..1\nx\n");
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(e.line() == 3);
    }
  }

  TEST_CASE("params file round trip") {
    LengthModelParams p;
    p.c = 0.1 + 0.2;
    p.sigma2 = 1.0 / 3.0;
    p.priors[{2, 2}] = 0.0123456789;
    LengthModelParams q = read_params(write_params(p));
    CHECK(q.c == p.c);
    CHECK(q.sigma2 == p.sigma2);
    CHECK(q.priors == p.priors);
    CHECK(write_params(LengthModelParams{}).starts_with("c=0.506\nsigma2=0.027556"));
  }

  TEST_CASE("params file errors and defaults") {
    CHECK(read_params("# only c\nc=0.6\n").sigma2 == LengthModelParams{}.sigma2);
    CHECK_THROWS_AS(read_params("bogus=1\n"), FormatError);
    CHECK_THROWS_AS(read_params("c=abc\n"), FormatError);
    CHECK_THROWS_AS(read_params("c=1\nc=2\n"), FormatError);
  }

  TEST_CASE("lexicon file") {
    CueLexicon lex = read_lexicon("# cues\nvariance=0.5\ngovernor\t總督\nJ.P.\tJ.P.\n");
    CHECK(lex.variance() == 0.5);
    REQUIRE(lex.size() == 2);
    CHECK(lex.cues()[0].chinese == U"總督");
    CueLexicon again = read_lexicon(write_lexicon(lex));
    CHECK(again.size() == 2);
    CHECK(again.cues()[1].english == U"J.P.");
    CHECK_THROWS_AS(read_lexicon("governor\n"), FormatError);
    CHECK_THROWS_AS(read_lexicon("variance=0\n"), FormatError);
  }
}
