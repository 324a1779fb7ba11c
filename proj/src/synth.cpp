#include "bitext/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitext/length_metric.hpp"

namespace bitext {
namespace {

// Common ideographs that do not occur in any built-in cue.
constexpr std::u32string_view kWideFiller =
    U"的是在不了有和人這中大為上個國我以要他時來用們生到作地於出就分對成會可主發年動同工也能下過子說產種面而方後多定行學法所民得經";

class Generator {
 public:
  explicit Generator(const GenConfig& cfg)
      : cfg_(cfg), rng_(cfg.seed), english_(Language::english), chinese_(Language::chinese) {
    for (const auto& [cls, p] : cfg_.class_mix) {
      classes_.push_back(cls);
      weights_.push_back(p);
    }
    if (cfg_.cue_injection) {
      // A cue is usable only if injecting it yields equal counts for every cue,
      // e.g. 十二月 also contains 二月 and so is not a matched pair.
      const auto& cues = cfg_.cue_injection->lexicon.cues();
      for (std::size_t k = 0; k < cues.size(); ++k) {
        bool matched = true;
        for (const Cue& other : cues) {
          matched = matched && count_occurrences(cues[k].english, other.english) ==
                                   count_occurrences(cues[k].chinese, other.chinese);
        }
        if (matched) usable_cues_.push_back(k);
      }
    }
  }

  GeneratedCorpus run() {
    GeneratedCorpus out;
    if (cfg_.header_stretch) {
      out.header_beads = emit_stretch(*cfg_.header_stretch);
    }
    std::discrete_distribution<std::size_t> pick_class(weights_.begin(), weights_.end());
    std::uniform_int_distribution<int> paragraph_size(3, 8);
    int until_break = 0;
    for (std::size_t n = 0; n < cfg_.n_beads; ++n) {
      if (until_break-- <= 0) {
        english_.begin_paragraph();
        chinese_.begin_paragraph();
        until_break = paragraph_size(rng_) - 1;
      }
      emit_bead(classes_[pick_class(rng_)]);
    }
    out.english = std::move(english_).build();
    out.chinese = std::move(chinese_).build();
    out.gold = std::move(gold_);
    return out;
  }

 private:
  void emit_bead(BeadClass cls) {
    std::uniform_int_distribution<HybridLength> eng_len(cfg_.min_english_length,
                                                        cfg_.max_english_length);
    std::vector<HybridLength> e(cls.a);
    HybridLength l1 = 0;
    for (auto& len : e) l1 += (len = eng_len(rng_));

    std::vector<HybridLength> c;
    if (cls.b > 0) {
      // A bead with no English side still draws a notional source length.
      const HybridLength source = cls.a > 0 ? l1 : eng_len(rng_);
      const double mean = cfg_.c * static_cast<double>(source);
      const double noise = std::sqrt(static_cast<double>(source)) * cfg_.sigma * normal_(rng_);
      const auto l2 = std::max<HybridLength>(std::llround(mean + noise), cls.b);
      c = split(l2, cls.b);
    }

    std::optional<std::size_t> cue;
    if (!usable_cues_.empty() && cls.a > 0 && cls.b > 0) {
      std::bernoulli_distribution inject(cfg_.cue_injection->rate);
      if (inject(rng_)) cue = pick_cue();
    }
    add_bead(cls, e, c, cue, false);
  }

  /// Returns the number of stretch beads, boundary excluded.
  std::size_t emit_stretch(const HeaderStretch& hs) {
    const BeadClass p = hs.perturbation;
    if (static_cast<std::size_t>(p.a) > hs.length) {
      throw std::invalid_argument("header stretch shorter than its perturbation");
    }
    const std::size_t one_to_one = hs.length - p.a;
    const std::size_t at = hs.perturbation_index;
    if (at > one_to_one) throw std::invalid_argument("perturbation index outside the stretch");
    const HybridLength le = hs.english_length;
    const HybridLength lc = std::max<HybridLength>(1, std::llround(cfg_.c * static_cast<double>(le)));
    const bool cues = !usable_cues_.empty();
    std::optional<std::size_t> previous_cue;
    for (std::size_t k = 0; k <= one_to_one; ++k) {
      if (k == at) {
        std::optional<std::size_t> cue;
        if (cues && p.a > 0 && p.b > 0) cue = pick_cue(previous_cue);
        english_.begin_paragraph();
        chinese_.begin_paragraph();
        add_bead(p, std::vector<HybridLength>(p.a, le), std::vector<HybridLength>(p.b, lc), cue,
                 true);
        previous_cue = cue;
      }
      if (k == one_to_one) break;
      std::optional<std::size_t> cue;
      if (cues) cue = pick_cue(previous_cue);
      english_.begin_paragraph();
      chinese_.begin_paragraph();
      add_bead({1, 1}, {le}, {lc}, cue, true);
      previous_cue = cue;
    }
    const std::size_t stretch_beads = gold_.beads.size();
    if (hs.boundary) {
      const BeadClass q = *hs.boundary;
      std::optional<std::size_t> cue;
      if (cues && q.a > 0 && q.b > 0) cue = pick_cue(previous_cue);
      english_.begin_paragraph();
      chinese_.begin_paragraph();
      add_bead(q, std::vector<HybridLength>(q.a, le), std::vector<HybridLength>(q.b, lc), cue, true);
    }
    return stretch_beads;
  }

  std::size_t pick_cue(std::optional<std::size_t> avoid = std::nullopt) {
    const std::size_t n = usable_cues_.size();
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::size_t k = usable_cues_[pick(rng_)];
    while (avoid && n > 1 && k == *avoid) k = usable_cues_[pick(rng_)];
    return k;
  }

  /// Splits total into parts pieces of at least 1 with random proportions.
  std::vector<HybridLength> split(HybridLength total, int parts) {
    if (parts == 1) return {total};
    std::uniform_real_distribution<double> weight(0.5, 1.5);
    std::vector<double> w(parts);
    double sum = 0.0;
    for (double& x : w) sum += (x = weight(rng_));
    std::vector<HybridLength> out(parts, 1);
    HybridLength spare = total - parts;
    HybridLength given = 0;
    for (int k = 0; k + 1 < parts; ++k) {
      out[k] += std::llround(static_cast<double>(spare) * w[k] / sum);
      out[k] = std::min(out[k], 1 + spare - given);
      given += out[k] - 1;
    }
    out.back() += spare - given;
    return out;
  }

  void add_bead(BeadClass cls, const std::vector<HybridLength>& e,
                const std::vector<HybridLength>& c, std::optional<std::size_t> cue, bool upper) {
    const Bead bead = Bead::at(cls, english_.size(), chinese_.size());
    std::optional<Cue> pattern;
    if (cue) pattern = cfg_.cue_injection->lexicon.cues()[*cue];
    for (std::size_t k = 0; k < e.size(); ++k) {
      english_.add(english_text(e[k], k == 0 && pattern ? &pattern->english : nullptr, upper));
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
      chinese_.add(chinese_text(c[k], k == 0 && pattern ? &pattern->chinese : nullptr));
    }
    gold_.beads.push_back(bead);
  }

  /// Letters and single spaces, exactly len characters, ending in a period.
  std::u32string english_filler(HybridLength len, bool upper) {
    std::u32string s;
    std::uniform_int_distribution<int> letter(0, 25);
    std::bernoulli_distribution space(0.18);
    const char32_t base = upper ? U'A' : U'a';
    for (HybridLength k = 0; k < len; ++k) {
      const bool edge = k == 0 || k + 1 >= len || k + 2 == len;
      if (k + 1 == len && len >= 2) {
        s.push_back(U'.');
      } else if (!edge && s.back() != U' ' && space(rng_)) {
        s.push_back(U' ');
      } else {
        s.push_back(base + static_cast<char32_t>(letter(rng_)));
      }
    }
    return s;
  }

  std::u32string english_text(HybridLength len, const std::u32string* cue, bool upper) {
    if (cue) {
      const HybridLength need = hybrid_length(*cue);
      if (len >= need + 2) return *cue + U" " + english_filler(len - need - 1, upper);
    }
    return english_filler(len, upper);
  }

  /// Wide ideographs plus one narrow digit when len is odd.
  std::u32string chinese_filler(HybridLength len) {
    std::uniform_int_distribution<std::size_t> glyph(0, kWideFiller.size() - 1);
    std::u32string s;
    for (HybridLength k = 0; k < len / 2; ++k) s.push_back(kWideFiller[glyph(rng_)]);
    if (len % 2 == 1) {
      std::uniform_int_distribution<std::size_t> where(0, s.size());
      std::uniform_int_distribution<int> digit(0, 9);
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(where(rng_)),
               U'0' + static_cast<char32_t>(digit(rng_)));
    }
    return s;
  }

  std::u32string chinese_text(HybridLength len, const std::u32string* cue) {
    if (cue) {
      const HybridLength need = hybrid_length(*cue);
      if (len >= need + 1) return *cue + chinese_filler(len - need);
    }
    return chinese_filler(len);
  }

  const GenConfig& cfg_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::vector<BeadClass> classes_;
  std::vector<double> weights_;
  std::vector<std::size_t> usable_cues_;
  DocumentBuilder english_;
  DocumentBuilder chinese_;
  Alignment gold_;
};

}  // namespace

std::map<BeadClass, double> default_class_mix() {
  auto mix = default_priors();
  double total = 0.0;
  for (const auto& [cls, p] : mix) total += p;
  for (auto& [cls, p] : mix) p /= total;
  return mix;
}

void GenConfig::validate() const {
  if (!(c > 0.0)) throw std::invalid_argument("generator: c must be positive");
  if (!(sigma > 0.0)) throw std::invalid_argument("generator: sigma must be positive");
  if (min_english_length < 1 || max_english_length < min_english_length) {
    throw std::invalid_argument("generator: English length range must satisfy 1 <= min <= max");
  }
  double total = 0.0;
  for (const auto& [cls, p] : class_mix) {
    if (p < 0.0) throw std::invalid_argument("generator: negative class probability");
    if (cls.a < 0 || cls.b < 0 || cls.a + cls.b == 0) {
      throw std::invalid_argument("generator: unsupported class " + to_string(cls));
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("generator: class mix must sum to 1, sums to " +
                                std::to_string(total));
  }
  if (header_stretch) {
    if (header_stretch->english_length < 1) {
      throw std::invalid_argument("generator: header stretch passages need positive length");
    }
    BeadClass p = header_stretch->perturbation;
    if (p.a < 0 || p.b < 0 || p.a + p.b == 0) {
      throw std::invalid_argument("generator: bad perturbation class");
    }
    if (auto q = header_stretch->boundary; q && (q->a < 0 || q->b < 0 || q->a + q->b == 0)) {
      throw std::invalid_argument("generator: bad boundary class");
    }
  }
  if (cue_injection && !(cue_injection->rate >= 0.0 && cue_injection->rate <= 1.0)) {
    throw std::invalid_argument("generator: cue rate must lie in [0, 1]");
  }
}

GeneratedCorpus generate(const GenConfig& cfg) {
  cfg.validate();
  return Generator(cfg).run();
}

}  // namespace bitext
