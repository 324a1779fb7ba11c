#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bitext {

enum class Encoding { utf8, big5 };

/// Parses "utf-8"/"utf8"/"big5"/"big-5" (case-insensitive).
Encoding parse_encoding(std::string_view name);

class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// Decodes bytes to code points. Throws DecodeError at the first invalid or
/// truncated sequence.
std::u32string decode(std::string_view bytes, Encoding enc = Encoding::utf8);

/// Encodes code points. Throws std::invalid_argument for characters that the
/// target encoding cannot represent.
std::string encode(std::u32string_view text, Encoding enc = Encoding::utf8);

std::string to_utf8(std::u32string_view text);
std::u32string from_utf8(std::string_view bytes);

}  // namespace bitext
