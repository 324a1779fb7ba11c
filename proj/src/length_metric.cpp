#include "bitext/length_metric.hpp"

#include <algorithm>
#include <array>

namespace bitext {
namespace {

struct CodeRange {
  char32_t lo;
  char32_t hi;
};

// Sorted, non-overlapping.
constexpr std::array<CodeRange, 16> kWideRanges = {{
    {0x1100, 0x115F},    // Hangul Jamo leading consonants
    {0x2E80, 0x2FDF},    // CJK radicals, Kangxi radicals
    {0x2FF0, 0x303F},    // ideographic description, CJK symbols and punctuation
    {0x3040, 0x30FF},    // Hiragana, Katakana
    {0x3100, 0x31EF},    // Bopomofo, Hangul compatibility jamo, Kanbun, strokes
    {0x31F0, 0x4DBF},    // Katakana ext, enclosed CJK, compatibility, Ext A
    {0x4E00, 0x9FFF},    // CJK unified ideographs
    {0xA000, 0xA4CF},    // Yi
    {0xAC00, 0xD7A3},    // Hangul syllables
    {0xF900, 0xFAFF},    // CJK compatibility ideographs
    {0xFE10, 0xFE19},    // vertical forms
    {0xFE30, 0xFE6F},    // CJK compatibility forms, small form variants
    {0xFF01, 0xFF60},    // full-width ASCII variants
    {0xFFE0, 0xFFE6},    // full-width signs
    {0x20000, 0x2FFFD},  // supplementary ideographic plane
    {0x30000, 0x3FFFD},  // tertiary ideographic plane
}};

}  // namespace

CharWidth classify_char(char32_t ch) {
  if (ch < 0x1100) return CharWidth::narrow;
  auto it = std::upper_bound(kWideRanges.begin(), kWideRanges.end(), ch,
                             [](char32_t c, const CodeRange& r) { return c < r.lo; });
  if (it == kWideRanges.begin()) return CharWidth::narrow;
  --it;
  return ch <= it->hi ? CharWidth::wide : CharWidth::narrow;
}

HybridLength hybrid_length(std::u32string_view text) {
  HybridLength n = 0;
  for (char32_t ch : text) n += classify_char(ch) == CharWidth::wide ? 2 : 1;
  return n;
}

}  // namespace bitext
