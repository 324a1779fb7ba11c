#include <random>

#include "bitext/length_metric.hpp"
#include "bitext/text_codec.hpp"
#include "doctest.h"

using namespace bitext;

TEST_SUITE("length_metric") {
  TEST_CASE("hybrid length examples") {
    CHECK(hybrid_length(U"") == 0);
    CHECK(hybrid_length(U"AB, x") == 5);
    CHECK(hybrid_length(U"李華明議員問") == 12);
  }

  TEST_CASE("classify_char") {
    CHECK(classify_char(U'a') == CharWidth::narrow);
    CHECK(classify_char(U'中') == CharWidth::wide);
    CHECK(classify_char(U'，') == CharWidth::wide);
    CHECK(classify_char(U'。') == CharWidth::wide);
    CHECK(classify_char(U' ') == CharWidth::narrow);
    CHECK(classify_char(U'é') == CharWidth::narrow);
    CHECK(classify_char(U'ｱ') == CharWidth::narrow);  // half-width katakana
  }

  TEST_CASE("full-width comma is two Big-5 bytes") {
    CHECK(encode(U"，", Encoding::big5).size() == 2);
  }

  TEST_CASE("additivity") {
    std::mt19937_64 rng(7);
    const std::u32string alphabet = U"ab ,.1中文。，！？（）";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 20);
    for (int k = 0; k < 200; ++k) {
      std::u32string s, t;
      for (int i = len(rng); i > 0; --i) s.push_back(alphabet[pick(rng)]);
      for (int i = len(rng); i > 0; --i) t.push_back(alphabet[pick(rng)]);
      CHECK(hybrid_length(s + t) == hybrid_length(s) + hybrid_length(t));
    }
  }

  TEST_CASE("Big-5 byte count on sample strings") {
    for (std::u32string s : {std::u32string(U"MR FRED LI (in Cantonese):"), std::u32string(U"李華明議員問:"),
                             std::u32string(U"每月825元提高至950元，即加幅是15%。"),
                             std::u32string(U"「總督」先生；（譯文）")}) {
      CHECK(hybrid_length(s) == static_cast<HybridLength>(encode(s, Encoding::big5).size()));
    }
  }
}

TEST_SUITE("text_codec") {
  TEST_CASE("utf8 round trip") {
    const std::u32string s = U"Hello 中文 ¶ 𠀀 é";
    CHECK(from_utf8(to_utf8(s)) == s);
  }

  TEST_CASE("utf8 errors report byte offsets") {
    try {
      from_utf8(std::string("ab\xC3", 3));
      FAIL("expected DecodeError");
    } catch (const DecodeError& e) {
      CHECK(e.byte_offset() == 2);
    }
    try {
      from_utf8(std::string("abc\xFF", 4));
      FAIL("expected DecodeError");
    } catch (const DecodeError& e) {
      CHECK(e.byte_offset() == 3);
    }
    CHECK_THROWS_AS(from_utf8("\xC0\x80"), DecodeError);  // overlong
    CHECK_THROWS_AS(from_utf8("\xED\xA0\x80"), DecodeError);  // surrogate
  }

  TEST_CASE("big5 round trip and errors") {
    const std::u32string s = U"總督先生, J.P.";
    const std::string bytes = encode(s, Encoding::big5);
    CHECK(decode(bytes, Encoding::big5) == s);
    CHECK_THROWS_AS(encode(U"𠀀", Encoding::big5), std::invalid_argument);
    CHECK_THROWS_AS(decode(std::string("\xA4", 1), Encoding::big5), DecodeError);
  }

  TEST_CASE("encoding names") {
    CHECK(parse_encoding("utf-8") == Encoding::utf8);
    CHECK(parse_encoding("big5") == Encoding::big5);
    CHECK_THROWS(parse_encoding("latin1"));
  }
}
