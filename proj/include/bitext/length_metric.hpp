#pragma once

#include <string_view>

#include "bitext/corpus.hpp"

namespace bitext {

enum class CharWidth { narrow, wide };

/// Wide for CJK ideographs, CJK symbols and punctuation, kana, bopomofo,
/// hangul, CJK compatibility/small forms and full-width forms. Everything else,
/// including non-ASCII alphabetic scripts, is narrow.
CharWidth classify_char(char32_t ch);

/// 2 per wide character plus 1 per narrow character. For text representable in
/// Big-5 this equals the Big-5 byte count.
HybridLength hybrid_length(std::u32string_view text);

}  // namespace bitext
