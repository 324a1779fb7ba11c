#include "bitext/evaluator.hpp"

#include <cstdio>
#include <vector>
#include <set>
#include <stdexcept>
#include <tuple>

namespace bitext {
namespace {

using BeadKey = std::tuple<int, int, std::size_t, std::size_t, std::size_t, std::size_t>;

BeadKey key_of(const Bead& b) {
  return {b.cls.a, b.cls.b, b.eng.begin, b.eng.end, b.chi.begin, b.chi.end};
}

std::pair<std::size_t, std::size_t> coverage(const Alignment& al) {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  for (const Bead& b : al.beads) {
    n1 += b.eng.size();
    n2 += b.chi.size();
  }
  return {n1, n2};
}

bool range_inside(Range r, Range outer) {
  return r.empty() || (r.begin >= outer.begin && r.end <= outer.end);
}

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", 100.0 * fraction);
  return buf;
}

}  // namespace

bool RegionFilter::contains(const Bead& bead) const {
  return range_inside(bead.eng, eng) && range_inside(bead.chi, chi);
}

EvalReport evaluate(const Alignment& output, const Alignment& gold,
                    const std::optional<RegionFilter>& region) {
  auto [o1, o2] = coverage(output);
  auto [g1, g2] = coverage(gold);
  if (o1 != g1 || o2 != g2) {
    throw std::invalid_argument("evaluate: output covers " + std::to_string(o1) + "/" +
                                std::to_string(o2) + " passages but gold covers " +
                                std::to_string(g1) + "/" + std::to_string(g2));
  }
  auto in_region = [&](const Bead& b) { return !region || region->contains(b); };

  std::set<BeadKey> produced;
  for (const Bead& b : output.beads) produced.insert(key_of(b));
  std::set<BeadKey> gold_keys;
  for (const Bead& b : gold.beads) gold_keys.insert(key_of(b));

  EvalReport report;
  for (BeadClass cls : kReportedClasses) report.per_class[cls] = {};

  for (const Bead& b : gold.beads) {
    if (!in_region(b)) continue;
    const bool correct = produced.count(key_of(b)) > 0;
    ++report.gold_beads;
    if (correct) ++report.gold_correct;
    auto it = report.per_class.find(b.cls);
    ClassTally& tally = it != report.per_class.end() ? it->second : report.other;
    ++tally.total;
    ++(correct ? tally.correct : tally.incorrect);
  }
  if (report.gold_beads > 0) {
    report.type1_accuracy =
        static_cast<double>(report.gold_correct) / static_cast<double>(report.gold_beads);
  }

  for (const Bead& b : output.beads) {
    if (!in_region(b)) continue;
    ++report.output_counts[b.cls];
    if (b.cls == BeadClass{1, 1}) {
      ++report.output_one_to_one;
      if (gold_keys.count(key_of(b)) > 0) ++report.output_one_to_one_correct;
    }
  }
  if (report.output_one_to_one > 0) {
    report.type2_precision = static_cast<double>(report.output_one_to_one_correct) /
                             static_cast<double>(report.output_one_to_one);
  }
  return report;
}

std::string format_report(const EvalReport& report) {
  // Table column order; deletion/insertion columns only when they occur.
  std::vector<std::pair<std::string, ClassTally>> columns;
  for (BeadClass cls : kReportedClasses) {
    const ClassTally& tally = report.per_class.at(cls);
    if (tally.total > 0 || (cls.a > 0 && cls.b > 0)) columns.emplace_back(to_string(cls), tally);
  }
  if (report.other.total > 0) columns.emplace_back("other", report.other);

  std::string out = "bead";
  for (const auto& [name, tally] : columns) out += "\t" + name;
  out += "\n";
  auto row = [&](const char* label, auto field) {
    out += label;
    for (const auto& col : columns) out += "\t" + field(col.second);
    out += "\n";
  };
  row("Total", [](const ClassTally& t) { return std::to_string(t.total); });
  row("Correct", [](const ClassTally& t) { return std::to_string(t.correct); });
  row("Incorrect", [](const ClassTally& t) { return std::to_string(t.incorrect); });
  row("% Correct", [](const ClassTally& t) { return percent(t.fraction_correct()); });
  out += "Type I: " + std::to_string(report.gold_correct) + "/" +
         std::to_string(report.gold_beads) + " = " + percent(report.type1_accuracy) + "%\n";
  out += "Type II: " + std::to_string(report.output_one_to_one_correct) + "/" +
         std::to_string(report.output_one_to_one) + " = " + percent(report.type2_precision) +
         "%\n";
  return out;
}

}  // namespace bitext
