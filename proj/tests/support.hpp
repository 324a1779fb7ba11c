#pragma once

#include <random>
#include <string>
#include <vector>

#include "bitext/corpus.hpp"

namespace bitext::testing {

/// Filler text of exactly `len` hybrid units.
inline std::u32string filler(Language lang, HybridLength len) {
  if (lang == Language::english) return std::u32string(static_cast<std::size_t>(len), U'x');
  std::u32string s(static_cast<std::size_t>(len / 2), U'中');
  if (len % 2 == 1) s.push_back(U'1');
  return s;
}

inline Document doc_of_lengths(Language lang, const std::vector<HybridLength>& lengths) {
  DocumentBuilder b(lang);
  for (HybridLength len : lengths) b.add(filler(lang, len));
  return std::move(b).build();
}

inline Document doc_of_texts(Language lang, const std::vector<std::u32string>& texts) {
  DocumentBuilder b(lang);
  for (const auto& t : texts) b.add(t);
  return std::move(b).build();
}

inline std::vector<HybridLength> random_lengths(std::mt19937_64& rng, std::size_t n,
                                                HybridLength lo, HybridLength hi) {
  std::uniform_int_distribution<HybridLength> d(lo, hi);
  std::vector<HybridLength> out(n);
  for (auto& x : out) x = d(rng);
  return out;
}

}  // namespace bitext::testing
