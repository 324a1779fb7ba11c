#include "bitext/text_codec.hpp"

#include <iconv.h>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <vector>

namespace bitext {
namespace {

class IconvHandle {
 public:
  IconvHandle(const char* to, const char* from) : cd_(iconv_open(to, from)) {
    if (cd_ == reinterpret_cast<iconv_t>(-1)) {
      throw std::runtime_error(std::string("iconv cannot convert ") + from + " to " + to);
    }
  }
  ~IconvHandle() { iconv_close(cd_); }
  IconvHandle(const IconvHandle&) = delete;
  IconvHandle& operator=(const IconvHandle&) = delete;
  iconv_t get() const { return cd_; }

 private:
  iconv_t cd_;
};

std::u32string decode_big5(std::string_view bytes) {
  IconvHandle cd("UTF-32LE", "BIG5");
  std::vector<char> out(bytes.size() * 4 + 4);
  char* in_ptr = const_cast<char*>(bytes.data());
  std::size_t in_left = bytes.size();
  char* out_ptr = out.data();
  std::size_t out_left = out.size();
  if (iconv(cd.get(), &in_ptr, &in_left, &out_ptr, &out_left) == static_cast<std::size_t>(-1)) {
    std::size_t offset = bytes.size() - in_left;
    if (errno == EINVAL) throw DecodeError("truncated Big-5 sequence", offset);
    throw DecodeError("invalid Big-5 sequence", offset);
  }
  std::size_t produced = out.size() - out_left;
  std::u32string text;
  text.reserve(produced / 4);
  for (std::size_t i = 0; i + 3 < produced; i += 4) {
    auto b = [&](std::size_t k) { return static_cast<char32_t>(static_cast<unsigned char>(out[i + k])); };
    text.push_back(b(0) | (b(1) << 8) | (b(2) << 16) | (b(3) << 24));
  }
  return text;
}

std::string encode_big5(std::u32string_view text) {
  std::string le;
  le.reserve(text.size() * 4);
  for (char32_t ch : text) {
    for (int k = 0; k < 4; ++k) le.push_back(static_cast<char>((ch >> (8 * k)) & 0xFF));
  }
  IconvHandle cd("BIG5", "UTF-32LE");
  std::string out(text.size() * 2 + 4, '\0');
  char* in_ptr = le.data();
  std::size_t in_left = le.size();
  char* out_ptr = out.data();
  std::size_t out_left = out.size();
  if (iconv(cd.get(), &in_ptr, &in_left, &out_ptr, &out_left) == static_cast<std::size_t>(-1)) {
    throw std::invalid_argument("character at index " + std::to_string((le.size() - in_left) / 4) +
                                " is not representable in Big-5");
  }
  out.resize(out.size() - out_left);
  return out;
}

}  // namespace

Encoding parse_encoding(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
  if (n == "utf-8" || n == "utf8") return Encoding::utf8;
  if (n == "big5" || n == "big-5") return Encoding::big5;
  throw std::invalid_argument("unsupported encoding '" + std::string(name) + "'");
}

std::u32string from_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    auto lead = static_cast<unsigned char>(bytes[i]);
    int extra = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1, cp = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2, cp = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3, cp = lead & 0x07, min = 0x10000;
    } else {
      throw DecodeError("invalid UTF-8 lead byte", i);
    }
    if (i + extra >= bytes.size()) {
      throw DecodeError("truncated UTF-8 sequence", i);
    }
    for (int k = 1; k <= extra; ++k) {
      auto cont = static_cast<unsigned char>(bytes[i + k]);
      if ((cont & 0xC0) != 0x80) throw DecodeError("invalid UTF-8 continuation byte", i + k);
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < min) throw DecodeError("overlong UTF-8 sequence", i);
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw DecodeError("UTF-8 sequence encodes an invalid code point", i);
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string to_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0x10FFFF) {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      throw std::invalid_argument("code point out of range");
    }
  }
  return out;
}

std::u32string decode(std::string_view bytes, Encoding enc) {
  return enc == Encoding::utf8 ? from_utf8(bytes) : decode_big5(bytes);
}

std::string encode(std::u32string_view text, Encoding enc) {
  return enc == Encoding::utf8 ? to_utf8(text) : encode_big5(text);
}

}  // namespace bitext
