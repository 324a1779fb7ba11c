#include "bitext/aligner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bitext {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint8_t kNoBack = 0xFF;

/// Scores candidate beads from per-document prefix sums.
class BeadScorer {
 public:
  BeadScorer(const Document& english, const Document& chinese, const LengthModelParams& params,
             const CueLexicon* lexicon)
      : params_(params), lexicon_(lexicon) {
    len1_ = prefix_lengths(english);
    len2_ = prefix_lengths(chinese);
    if (lexicon_ && !lexicon_->empty()) {
      cues1_ = CuePrefixCounts(english, *lexicon_, Language::english);
      cues2_ = CuePrefixCounts(chinese, *lexicon_, Language::chinese);
      sd_ = std::sqrt(lexicon_->variance());
    }
  }

  /// Cost of the bead of class cls ending at (i, j).
  double cost(BeadClass cls, std::size_t i, std::size_t j) {
    const std::size_t i0 = i - cls.a;
    const std::size_t j0 = j - cls.b;
    double c = match_cost(len1_[i] - len1_[i0], len2_[j] - len2_[j0], cls, params_);
    if (lexicon_ && !lexicon_->empty()) {
      double lex = 0.0;
      for (std::size_t k = 0; k < cues1_.cues(); ++k) {
        int diff = cues2_.count(k, j0, j) - cues1_.count(k, i0, i);
        if (diff != 0) lex += difference_cost(diff);
      }
      c += lex;
    }
    return snap_cost(c);
  }

 private:
  static std::vector<HybridLength> prefix_lengths(const Document& doc) {
    std::vector<HybridLength> out(doc.size() + 1, 0);
    for (std::size_t i = 0; i < doc.size(); ++i) out[i + 1] = out[i] + doc[i].length();
    return out;
  }

  double difference_cost(int diff) {
    const std::size_t key = static_cast<std::size_t>(std::abs(diff));
    if (key >= diff_cache_.size()) diff_cache_.resize(key + 1, -1.0);
    double& slot = diff_cache_[key];
    if (slot < 0.0) {
      slot = floored_neg_log(two_tailed_probability(diff / sd_), params_.probability_floor);
    }
    return slot;
  }

  const LengthModelParams& params_;
  const CueLexicon* lexicon_;
  std::vector<HybridLength> len1_;
  std::vector<HybridLength> len2_;
  CuePrefixCounts cues1_;
  CuePrefixCounts cues2_;
  double sd_ = 1.0;
  std::vector<double> diff_cache_;
};

/// Row-wise band of the DP table: row i holds columns [lo[i], hi[i]].
struct Band {
  std::vector<std::size_t> lo;
  std::vector<std::size_t> hi;
  std::vector<std::size_t> offset;
  std::size_t cells = 0;

  bool contains(std::size_t i, std::size_t j) const { return j >= lo[i] && j <= hi[i]; }
  std::size_t index(std::size_t i, std::size_t j) const { return offset[i] + (j - lo[i]); }
};

Band full_band(std::size_t n1, std::size_t n2) {
  Band b;
  b.lo.assign(n1 + 1, 0);
  b.hi.assign(n1 + 1, n2);
  b.offset.resize(n1 + 1);
  for (std::size_t i = 0; i <= n1; ++i) b.offset[i] = i * (n2 + 1);
  b.cells = (n1 + 1) * (n2 + 1);
  return b;
}

/// |i*n2 - j*n1| <= width*n1, i.e. |i*n2/n1 - j| <= width.
Band diagonal_band(std::size_t n1, std::size_t n2, std::size_t width) {
  Band b;
  b.lo.resize(n1 + 1);
  b.hi.resize(n1 + 1);
  b.offset.resize(n1 + 1);
  const auto N1 = static_cast<std::int64_t>(n1);
  const auto N2 = static_cast<std::int64_t>(n2);
  const auto W = static_cast<std::int64_t>(width);
  for (std::size_t i = 0; i <= n1; ++i) {
    const auto I = static_cast<std::int64_t>(i);
    // j*n1 >= i*n2 - W*n1  and  j*n1 <= i*n2 + W*n1
    std::int64_t low_num = I * N2 - W * N1;
    std::int64_t lo = low_num <= 0 ? 0 : (low_num + N1 - 1) / N1;
    std::int64_t hi = std::min(N2, (I * N2 + W * N1) / N1);
    b.lo[i] = static_cast<std::size_t>(std::min(lo, N2));
    b.hi[i] = static_cast<std::size_t>(std::max(hi, static_cast<std::int64_t>(b.lo[i])));
    b.offset[i] = b.cells;
    b.cells += b.hi[i] - b.lo[i] + 1;
  }
  return b;
}

std::optional<Alignment> run_dp(std::size_t n1, std::size_t n2, const Band& band,
                                BeadScorer& scorer) {
  std::vector<double> cost(band.cells, kInf);
  std::vector<std::uint8_t> back(band.cells, kNoBack);
  if (!band.contains(0, 0)) return std::nullopt;
  cost[band.index(0, 0)] = 0.0;
  for (std::size_t i = 0; i <= n1; ++i) {
    for (std::size_t j = band.lo[i]; j <= band.hi[i]; ++j) {
      if (i == 0 && j == 0) continue;
      double best = kInf;
      std::uint8_t best_rank = kNoBack;
      for (std::uint8_t r = 0; r < kProducibleClasses.size(); ++r) {
        const BeadClass cls = kProducibleClasses[r];
        if (static_cast<std::size_t>(cls.a) > i || static_cast<std::size_t>(cls.b) > j) continue;
        const std::size_t pi = i - cls.a;
        const std::size_t pj = j - cls.b;
        if (!band.contains(pi, pj)) continue;
        const double prev = cost[band.index(pi, pj)];
        if (prev == kInf) continue;
        const double cand = prev + scorer.cost(cls, i, j);
        if (cand < best) {
          best = cand;
          best_rank = r;
        }
      }
      cost[band.index(i, j)] = best;
      back[band.index(i, j)] = best_rank;
    }
  }
  if (!band.contains(n1, n2) || cost[band.index(n1, n2)] == kInf) return std::nullopt;

  Alignment out;
  out.total_cost = cost[band.index(n1, n2)];
  std::size_t i = n1;
  std::size_t j = n2;
  while (i > 0 || j > 0) {
    const BeadClass cls = kProducibleClasses[back[band.index(i, j)]];
    i -= cls.a;
    j -= cls.b;
    out.beads.push_back(Bead::at(cls, i, j));
  }
  std::reverse(out.beads.begin(), out.beads.end());
  return out;
}

Alignment align_impl(const Document& english, const Document& chinese,
                     const LengthModelParams& params, const CueLexicon* lexicon,
                     std::optional<std::size_t> band_width) {
  params.validate();
  const std::size_t n1 = english.size();
  const std::size_t n2 = chinese.size();
  BeadScorer scorer(english, chinese, params, lexicon);
  const bool banded =
      band_width && n1 > 0 && n2 > 0 && *band_width < std::max(n1, n2);
  if (banded) {
    if (auto al = run_dp(n1, n2, diagonal_band(n1, n2, *band_width), scorer)) return *al;
  }
  auto al = run_dp(n1, n2, full_band(n1, n2), scorer);
  if (!al) throw std::logic_error("full alignment table has no complete path");
  return *al;
}

struct BruteForceSearch {
  const Document& english;
  const Document& chinese;
  const LengthModelParams& params;
  const CueLexicon& lexicon;

  std::vector<Bead> path;
  std::optional<Alignment> best;

  void run(std::size_t i, std::size_t j, double so_far) {
    if (i == english.size() && j == chinese.size()) {
      consider(so_far);
      return;
    }
    for (BeadClass cls : kProducibleClasses) {
      if (i + cls.a > english.size() || j + cls.b > chinese.size()) continue;
      Bead bead = Bead::at(cls, i, j);
      double c = snap_cost(combined_cost(bead, english, chinese, params, lexicon));
      path.push_back(bead);
      run(bead.eng.end, bead.chi.end, so_far + c);
      path.pop_back();
    }
  }

  void consider(double total) {
    if (!best || total < best->total_cost ||
        (total == best->total_cost && reverse_rank_less(path, best->beads))) {
      best = Alignment{path, total};
    }
  }

  /// Compares class ranks from the last bead backwards.
  static bool reverse_rank_less(const std::vector<Bead>& x, const std::vector<Bead>& y) {
    auto xi = x.rbegin();
    auto yi = y.rbegin();
    for (; xi != x.rend() && yi != y.rend(); ++xi, ++yi) {
      std::size_t rx = tie_rank(xi->cls);
      std::size_t ry = tie_rank(yi->cls);
      if (rx != ry) return rx < ry;
    }
    return false;
  }
};

}  // namespace

double snap_cost(double cost) { return std::ldexp(std::nearbyint(std::ldexp(cost, 24)), -24); }

Alignment align(const Document& english, const Document& chinese, const LengthModelParams& params) {
  return align_impl(english, chinese, params, nullptr, std::nullopt);
}

Alignment align(const Document& english, const Document& chinese, const LengthModelParams& params,
                const CueLexicon& lexicon) {
  return align_impl(english, chinese, params, &lexicon, std::nullopt);
}

Alignment align_banded(const Document& english, const Document& chinese,
                       const LengthModelParams& params, const CueLexicon& lexicon,
                       std::size_t band) {
  return align_impl(english, chinese, params, &lexicon, band);
}

Alignment align_bruteforce(const Document& english, const Document& chinese,
                           const LengthModelParams& params, const CueLexicon& lexicon) {
  if (english.size() > kBruteforceLimit || chinese.size() > kBruteforceLimit) {
    throw std::length_error("align_bruteforce: documents limited to " +
                            std::to_string(kBruteforceLimit) + " passages");
  }
  params.validate();
  BruteForceSearch search{english, chinese, params, lexicon, {}, std::nullopt};
  search.run(0, 0, 0.0);
  return *search.best;
}

Document paragraph_document(const Document& doc) {
  DocumentBuilder builder(doc.lang());
  for (auto [begin, end] : doc.paragraphs()) {
    std::u32string text;
    for (std::size_t i = begin; i < end; ++i) {
      if (i > begin) text.push_back(U' ');
      text += doc[i].text();
    }
    builder.begin_paragraph();
    builder.add(std::move(text), PassageKind::other);
  }
  return std::move(builder).build();
}

Alignment align_anchored(const Document& english, const Document& chinese,
                         const LengthModelParams& params, const CueLexicon& paragraph_lexicon,
                         const CueLexicon& sentence_lexicon) {
  // starts[k] is the first passage of paragraph k; starts.back() is the size.
  auto paragraph_starts = [](const Document& doc) {
    std::vector<std::size_t> starts;
    for (auto [begin, end] : doc.paragraphs()) starts.push_back(begin);
    starts.push_back(doc.size());
    return starts;
  };
  const auto starts1 = paragraph_starts(english);
  const auto starts2 = paragraph_starts(chinese);
  Alignment coarse = align(paragraph_document(english), paragraph_document(chinese), params,
                           paragraph_lexicon);
  Alignment out;
  for (const Bead& group : coarse.beads) {
    const Range e{starts1[group.eng.begin], starts1[group.eng.end]};
    const Range c{starts2[group.chi.begin], starts2[group.chi.end]};
    Alignment inner = align(english.slice(e.begin, e.end), chinese.slice(c.begin, c.end), params,
                            sentence_lexicon);
    for (Bead b : inner.beads) {
      b.eng.begin += e.begin;
      b.eng.end += e.begin;
      b.chi.begin += c.begin;
      b.chi.end += c.begin;
      out.beads.push_back(b);
    }
    out.total_cost += inner.total_cost;
  }
  return out;
}

}  // namespace bitext
