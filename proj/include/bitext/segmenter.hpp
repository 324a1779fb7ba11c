#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bitext/corpus.hpp"

namespace bitext {

/// Punctuation and spacing heuristics for one language.
struct SegmentationRules {
  /// Characters that end a sentence.
  std::u32string terminators;
  /// Characters absorbed into a sentence right after its terminator
  /// (closing quotes and brackets, repeated terminators).
  std::u32string closers;
  /// A terminator only breaks when followed by whitespace or end of line.
  bool break_needs_space = true;
  /// "C.B.E.", "J." and similar single-letter-dot tokens never end a sentence.
  bool single_letter_abbreviations = true;
  /// A period between two digits never ends a sentence.
  bool decimal_guard = true;
  /// Whole tokens (ending in a terminator) that never end a sentence.
  std::vector<std::u32string> abbreviation_exceptions;
  /// A line ending in one of these ends a passage (speaker turns).
  std::u32string line_end_colons;
  /// Starts a new paragraph wherever it occurs; kept in the passage text.
  char32_t paragraph_mark = U'¶';
  /// Lines starting with a bullet or enumerator become list-item passages.
  bool detect_list_items = true;

  static SegmentationRules english();
  static SegmentationRules chinese();
  static SegmentationRules for_language(Language lang);
};

/// Splits decoded raw text into passages and paragraphs. Never fails: odd input
/// gives odd boundaries but every non-whitespace character lands in exactly one
/// passage, in order. Runs of whitespace inside a passage collapse to one space.
Document segment(std::u32string_view raw, Language lang, const SegmentationRules& rules);
Document segment(std::u32string_view raw, Language lang);

/// `<p><s>..</s>..</p>` per paragraph, paragraphs separated by a newline, no
/// trailing newline. Non-sentence passages carry a `type` attribute. `<`, `>`
/// and `&` in passage text are escaped as entities.
std::u32string emit_markup(const Document& doc);

class MarkupError : public std::runtime_error {
 public:
  MarkupError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Inverse of emit_markup. Whitespace between tags is ignored. Throws
/// MarkupError (1-based line and column, in characters) on unknown or
/// unbalanced tags, text outside `<s>`, unknown entities and empty elements.
Document parse_markup(std::u32string_view marked, Language lang);

}  // namespace bitext
