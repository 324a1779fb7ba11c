#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bitext {

/// Hybrid length in single-byte-equivalent units (wide characters count 2).
using HybridLength = std::int64_t;

enum class Language { english, chinese };

enum class PassageKind { sentence, heading, list_item, other };

std::string_view to_string(Language lang);
std::string_view to_string(PassageKind kind);

/// Parses "en"/"english"/"zh"/"chinese". Throws std::invalid_argument.
Language parse_language(std::string_view tag);

/// One segmented unit of text. The hybrid length is computed at construction
/// and never diverges from the text.
class Passage {
 public:
  Passage(std::size_t id, std::u32string text, PassageKind kind = PassageKind::sentence);

  std::size_t id() const { return id_; }
  const std::u32string& text() const { return text_; }
  PassageKind kind() const { return kind_; }
  HybridLength length() const { return length_; }

 private:
  std::size_t id_;
  std::u32string text_;
  PassageKind kind_;
  HybridLength length_;
};

/// An ordered list of passages plus the indices at which paragraphs begin.
///
/// Invariants checked on construction: ids are 0..n-1 in order, every break is
/// a valid id, breaks are strictly increasing and start at 0 when n > 0.
class Document {
 public:
  Document() = default;
  explicit Document(Language lang) : lang_(lang) {}
  Document(Language lang, std::vector<Passage> passages, std::vector<std::size_t> paragraph_breaks);

  Language lang() const { return lang_; }
  const std::vector<Passage>& passages() const { return passages_; }
  const std::vector<std::size_t>& paragraph_breaks() const { return paragraph_breaks_; }
  std::size_t size() const { return passages_.size(); }
  bool empty() const { return passages_.empty(); }
  const Passage& operator[](std::size_t i) const { return passages_[i]; }

  /// Half-open passage ranges, one per paragraph.
  std::vector<std::pair<std::size_t, std::size_t>> paragraphs() const;

  /// Copy of passages [begin, end) renumbered from zero; paragraph breaks that
  /// fall inside the range are kept.
  Document slice(std::size_t begin, std::size_t end) const;

 private:
  Language lang_ = Language::english;
  std::vector<Passage> passages_;
  std::vector<std::size_t> paragraph_breaks_;
};

/// Incremental construction of a Document with consistent ids and breaks.
class DocumentBuilder {
 public:
  explicit DocumentBuilder(Language lang) : lang_(lang) {}

  /// The next added passage starts a new paragraph.
  void begin_paragraph() { pending_break_ = true; }
  void add(std::u32string text, PassageKind kind = PassageKind::sentence);
  std::size_t size() const { return passages_.size(); }
  Document build() &&;

 private:
  Language lang_;
  std::vector<Passage> passages_;
  std::vector<std::size_t> breaks_;
  bool pending_break_ = true;
};

/// Shape of a bead: a English passages aligned with b Chinese passages.
struct BeadClass {
  int a = 0;
  int b = 0;

  friend bool operator==(const BeadClass&, const BeadClass&) = default;
  friend auto operator<=>(const BeadClass&, const BeadClass&) = default;
};

/// The six classes the aligner can produce, in tie-break order (earlier wins).
inline constexpr std::array<BeadClass, 6> kProducibleClasses = {
    BeadClass{1, 1}, BeadClass{1, 2}, BeadClass{2, 1},
    BeadClass{2, 2}, BeadClass{0, 1}, BeadClass{1, 0}};

/// The classes reported individually by the evaluator; anything else is "other".
inline constexpr std::array<BeadClass, 9> kReportedClasses = {
    BeadClass{1, 1}, BeadClass{1, 2}, BeadClass{2, 1}, BeadClass{2, 2}, BeadClass{1, 3},
    BeadClass{3, 1}, BeadClass{3, 3}, BeadClass{0, 1}, BeadClass{1, 0}};

bool is_producible(BeadClass cls);

/// Position of cls in kProducibleClasses; throws std::invalid_argument otherwise.
std::size_t tie_rank(BeadClass cls);

/// "a-b"
std::string to_string(BeadClass cls);

/// Half-open range of passage ids.
struct Range {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  friend bool operator==(const Range&, const Range&) = default;
};

struct Bead {
  BeadClass cls;
  Range eng;
  Range chi;

  /// Bead of class cls whose ranges start at (eng_begin, chi_begin).
  static Bead at(BeadClass cls, std::size_t eng_begin, std::size_t chi_begin);

  friend bool operator==(const Bead&, const Bead&) = default;
};

struct Alignment {
  std::vector<Bead> beads;
  double total_cost = 0.0;
};

struct AlignmentViolation {
  std::size_t bead_index;
  std::string what;
};

/// Checks the monotone exhaustive coverage invariants for documents of n1
/// English and n2 Chinese passages. Returns nothing when the alignment is valid.
std::optional<AlignmentViolation> validate_alignment(const Alignment& al, std::size_t n1,
                                                     std::size_t n2);

/// Sum of the hybrid lengths of passages [r.begin, r.end).
HybridLength range_length(const Document& doc, Range r);

}  // namespace bitext
