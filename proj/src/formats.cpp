#include "bitext/formats.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <vector>

#include "bitext/text_codec.hpp"

namespace bitext {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::size_t parse_index(std::string_view s, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw FormatError("expected a non-negative integer, got '" + std::string(s) + "'", line);
  }
  return value;
}

double parse_double(std::string_view s, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(value)) {
    throw FormatError("expected a number, got '" + std::string(s) + "'", line);
  }
  return value;
}

std::string format_range(Range r) {
  if (r.empty()) return "-";
  return std::to_string(r.begin) + ".." + std::to_string(r.end);
}

/// "-" is an empty range positioned at `cursor`.
Range parse_range(std::string_view s, std::size_t cursor, std::size_t line) {
  if (s == "-") return Range{cursor, cursor};
  std::size_t dots = s.find("..");
  if (dots == std::string_view::npos) throw FormatError("expected start..end", line);
  Range r{parse_index(s.substr(0, dots), line), parse_index(s.substr(dots + 2), line)};
  if (r.end <= r.begin) throw FormatError("range end must exceed start", line);
  return r;
}

constexpr std::pair<BeadClass, std::string_view> kPriorKeys[] = {
    {{0, 1}, "prior_0_1"}, {{1, 0}, "prior_1_0"}, {{1, 1}, "prior_1_1"},
    {{1, 2}, "prior_1_2"}, {{2, 1}, "prior_2_1"}, {{2, 2}, "prior_2_2"}};

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string write_alignment(const Alignment& al) {
  std::string out(kAlignmentHeader);
  out += '\n';
  for (const Bead& b : al.beads) {
    out += to_string(b.cls);
    out += '\t';
    out += format_range(b.eng);
    out += '\t';
    out += format_range(b.chi);
    out += '\n';
  }
  return out;
}

Alignment read_alignment(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || trim(lines[0]) != kAlignmentHeader) {
    throw FormatError("missing '" + std::string(kAlignmentHeader) + "' header", 1);
  }
  Alignment al;
  std::size_t next_e = 0;
  std::size_t next_c = 0;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    std::string_view line = trim(lines[n]);
    if (line.empty() || line.front() == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos) {
      throw FormatError("expected three tab-separated fields", line_no);
    }
    std::string_view cls_field = line.substr(0, t1);
    std::size_t dash = cls_field.find('-');
    if (dash == std::string_view::npos) throw FormatError("expected a-b bead class", line_no);
    BeadClass cls{static_cast<int>(parse_index(cls_field.substr(0, dash), line_no)),
                  static_cast<int>(parse_index(cls_field.substr(dash + 1), line_no))};
    Range e = parse_range(line.substr(t1 + 1, t2 - t1 - 1), next_e, line_no);
    Range c = parse_range(line.substr(t2 + 1), next_c, line_no);
    if (e.size() != static_cast<std::size_t>(cls.a) || c.size() != static_cast<std::size_t>(cls.b)) {
      throw FormatError("ranges do not match bead class " + to_string(cls), line_no);
    }
    if (e.empty() && c.empty()) throw FormatError("bead is empty on both sides", line_no);
    al.beads.push_back(Bead{cls, e, c});
    next_e = e.end;
    next_c = c.end;
  }
  return al;
}

std::string write_params(const LengthModelParams& params) {
  std::string out;
  out += "c=" + format_double(params.c) + "\n";
  out += "sigma2=" + format_double(params.sigma2) + "\n";
  for (const auto& [cls, key] : kPriorKeys) {
    out += std::string(key) + "=" + format_double(params.prior(cls)) + "\n";
  }
  return out;
}

LengthModelParams read_params(std::string_view text) {
  LengthModelParams params;
  std::set<std::string, std::less<>> seen;
  auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = trim(lines[n]);
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw FormatError("expected key=value", n + 1);
    std::string_view key = trim(line.substr(0, eq));
    double value = parse_double(trim(line.substr(eq + 1)), n + 1);
    if (!seen.emplace(key).second) {
      throw FormatError("duplicate key '" + std::string(key) + "'", n + 1);
    }
    if (key == "c") {
      params.c = value;
    } else if (key == "sigma2") {
      params.sigma2 = value;
    } else {
      bool known = false;
      for (const auto& [cls, name] : kPriorKeys) {
        if (key == name) {
          params.priors[cls] = value;
          known = true;
        }
      }
      if (!known) throw FormatError("unknown key '" + std::string(key) + "'", n + 1);
    }
  }
  return params;
}

CueLexicon read_lexicon(std::string_view utf8_text) {
  std::vector<Cue> cues;
  double variance = kDefaultCueVariance;
  auto lines = split_lines(utf8_text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = lines[n];
    if (trim(line).empty() || trim(line).front() == '#') continue;
    if (trim(line).starts_with("variance=")) {
      variance = parse_double(trim(trim(line).substr(9)), n + 1);
      continue;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || line.find('\t', tab + 1) != std::string_view::npos) {
      throw FormatError("expected english<TAB>chinese", n + 1);
    }
    try {
      cues.push_back({from_utf8(line.substr(0, tab)), from_utf8(line.substr(tab + 1))});
    } catch (const DecodeError& e) {
      throw FormatError(e.what(), n + 1);
    }
    if (cues.back().english.empty() || cues.back().chinese.empty()) {
      throw FormatError("empty cue pattern", n + 1);
    }
  }
  try {
    return CueLexicon(std::move(cues), variance);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what(), 0);
  }
}

std::string write_lexicon(const CueLexicon& lexicon) {
  std::string out = "variance=" + format_double(lexicon.variance()) + "\n";
  for (const Cue& cue : lexicon.cues()) {
    out += to_utf8(cue.english) + "\t" + to_utf8(cue.chinese) + "\n";
  }
  return out;
}

}  // namespace bitext
