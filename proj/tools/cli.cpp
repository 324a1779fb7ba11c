#include "cli.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "bitext/aligner.hpp"
#include "bitext/evaluator.hpp"
#include "bitext/formats.hpp"
#include "bitext/segmenter.hpp"
#include "bitext/synth.hpp"
#include "bitext/text_codec.hpp"
#include "json.hpp"

namespace bitext::cli {
namespace {

namespace fs = std::filesystem;

/// An error that already names the file it concerns.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_input(const std::string& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw IoError(path + ": no such file");
  std::ifstream probe(path, std::ios::binary);
  if (!probe) throw IoError(path + ": cannot open for reading");
}

void require_output(const std::string& path) {
  fs::path parent = fs::path(path).parent_path();
  if (parent.empty()) parent = ".";
  std::error_code ec;
  if (!fs::is_directory(parent, ec)) throw IoError(path + ": directory does not exist");
  if (fs::is_directory(path, ec)) throw IoError(path + ": is a directory");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError(path + ": read failed");
  return ss.str();
}

/// Writes through a temporary sibling and renames on success.
void write_file(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(tmp + ": cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError(path + ": write failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError(path + ": cannot replace file");
  }
}

std::u32string read_text(const std::string& path, Encoding enc) {
  const std::string bytes = read_file(path);
  try {
    return decode(bytes, enc);
  } catch (const DecodeError& e) {
    throw IoError(path + ": byte " + std::to_string(e.byte_offset()) + ": " + e.what());
  }
}

void write_text(const std::string& path, std::u32string_view text, Encoding enc) {
  std::string bytes;
  try {
    bytes = encode(text, enc);
  } catch (const std::exception& e) {
    throw IoError(path + ": " + e.what());
  }
  write_file(path, bytes);
}

Document read_marked(const std::string& path, Language lang, Encoding enc) {
  const std::u32string text = read_text(path, enc);
  try {
    return parse_markup(text, lang);
  } catch (const MarkupError& e) {
    throw IoError(path + ": " + e.what());
  }
}

template <typename F>
auto with_path(const std::string& path, F&& parse) {
  try {
    return parse();
  } catch (const FormatError& e) {
    throw IoError(path + ": " + e.what());
  }
}

Alignment read_alignment_file(const std::string& path) {
  const std::string text = read_file(path);
  return with_path(path, [&] { return read_alignment(text); });
}

LengthModelParams read_params_file(const std::string& path) {
  const std::string text = read_file(path);
  return with_path(path, [&] { return read_params(text); });
}

CueLexicon read_lexicon_file(const std::string& path, Encoding enc) {
  const std::string utf8 = to_utf8(read_text(path, enc));
  return with_path(path, [&] { return read_lexicon(utf8); });
}

void check_covers(const Alignment& al, const Document& e, const Document& c, const std::string& what) {
  if (auto v = validate_alignment(al, e.size(), c.size())) {
    throw std::invalid_argument(what + ": bead " + std::to_string(v->bead_index) + ": " + v->what);
  }
}

Range parse_range_arg(std::string_view s) {
  const std::size_t dots = s.find("..");
  if (dots == std::string_view::npos) throw std::invalid_argument("region ranges look like start..end");
  auto num = [](std::string_view t) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
      throw std::invalid_argument("bad region bound '" + std::string(t) + "'");
    }
    return v;
  };
  Range r{num(s.substr(0, dots)), num(s.substr(dots + 2))};
  if (r.end < r.begin) throw std::invalid_argument("region range end precedes start");
  return r;
}

/// "e0..e1,c0..c1"
RegionFilter parse_region(const std::string& s) {
  const std::size_t comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--region expects E0..E1,C0..C1");
  return {parse_range_arg(std::string_view(s).substr(0, comma)),
          parse_range_arg(std::string_view(s).substr(comma + 1))};
}

Encoding encoding_of(const std::string& name) { return parse_encoding(name); }

// ---------------------------------------------------------------- segment

struct SegmentOpts {
  std::string input, output, lang = "en", encoding = "utf-8";
};

void cmd_segment(const SegmentOpts& o) {
  const Encoding enc = encoding_of(o.encoding);
  const Language lang = parse_language(o.lang);
  require_input(o.input);
  require_output(o.output);
  Document d = segment(read_text(o.input, enc), lang);
  std::u32string marked = emit_markup(d);
  if (!marked.empty()) marked.push_back(U'\n');
  write_text(o.output, marked, enc);
}

// ---------------------------------------------------------------- estimate

struct EstimateOpts {
  std::string gold, english, chinese, output, encoding = "utf-8";
};

void cmd_estimate(const EstimateOpts& o) {
  const Encoding enc = encoding_of(o.encoding);
  for (const auto& p : {o.gold, o.english, o.chinese}) require_input(p);
  require_output(o.output);
  const Alignment gold = read_alignment_file(o.gold);
  const Document e = read_marked(o.english, Language::english, enc);
  const Document c = read_marked(o.chinese, Language::chinese, enc);
  check_covers(gold, e, c, o.gold);
  std::vector<LengthPair> pairs;
  for (const Bead& b : gold.beads) {
    if (!b.eng.empty() && !b.chi.empty()) pairs.push_back({range_length(e, b.eng), range_length(c, b.chi)});
  }
  if (pairs.empty()) throw std::invalid_argument(o.gold + ": no bead has passages on both sides");
  write_file(o.output, write_params(estimate_params(pairs)));
}

// ---------------------------------------------------------------- align

struct AlignOpts {
  std::string english, chinese, output, manifest, params, lexicon, paragraph_lexicon;
  std::string encoding = "utf-8";
  bool default_lexicon = false, paragraph_anchor = false, normalize_priors = false, density = false;
  std::optional<std::size_t> band;
  std::optional<double> prob_floor;
  unsigned jobs = 1;
};

struct AlignJob {
  std::string english, chinese, output;
};

struct AlignSetup {
  LengthModelParams params;
  CueLexicon lexicon;
  CueLexicon paragraph_lexicon;
};

void run_align_job(const AlignJob& job, const AlignOpts& o, const AlignSetup& s, Encoding enc) {
  const Document e = read_marked(job.english, Language::english, enc);
  const Document c = read_marked(job.chinese, Language::chinese, enc);
  Alignment al;
  if (o.paragraph_anchor) {
    al = align_anchored(e, c, s.params, s.paragraph_lexicon, s.lexicon);
  } else if (o.band) {
    al = align_banded(e, c, s.params, s.lexicon, *o.band);
  } else {
    al = align(e, c, s.params, s.lexicon);
  }
  write_file(job.output, write_alignment(al));
}

std::vector<AlignJob> read_manifest(const std::string& path) {
  std::vector<AlignJob> jobs;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    AlignJob job;
    std::istringstream fields(line);
    if (!std::getline(fields, job.english, '\t') || !std::getline(fields, job.chinese, '\t') ||
        !std::getline(fields, job.output, '\t') || fields.peek() != EOF) {
      throw IoError(path + ": line " + std::to_string(n) + ": expected english<TAB>chinese<TAB>output");
    }
    jobs.push_back(std::move(job));
  }
  return jobs;
}

void cmd_align(const AlignOpts& o, std::ostream& err) {
  const Encoding enc = encoding_of(o.encoding);
  if (o.band && o.paragraph_anchor) throw std::invalid_argument("--band cannot be combined with --paragraph-anchor");
  if (!o.lexicon.empty() && o.default_lexicon) {
    throw std::invalid_argument("--lexicon and --default-lexicon are mutually exclusive");
  }
  if (o.manifest.empty() == (o.english.empty() || o.chinese.empty() || o.output.empty())) {
    throw std::invalid_argument("give either --manifest or all of --english, --chinese, --output");
  }
  if (o.jobs == 0) throw std::invalid_argument("--jobs must be at least 1");

  std::vector<AlignJob> jobs;
  if (!o.manifest.empty()) {
    require_input(o.manifest);
    jobs = read_manifest(o.manifest);
  } else {
    jobs.push_back({o.english, o.chinese, o.output});
  }
  for (const std::string& p : {o.params, o.lexicon, o.paragraph_lexicon}) {
    if (!p.empty()) require_input(p);
  }
  for (const AlignJob& j : jobs) {
    require_input(j.english);
    require_input(j.chinese);
    require_output(j.output);
  }

  AlignSetup s;
  if (!o.params.empty()) s.params = read_params_file(o.params);
  if (o.normalize_priors) s.params = s.params.with_normalized_priors();
  if (o.density) s.params.form = MatchProbability::density;
  if (o.prob_floor) s.params.probability_floor = *o.prob_floor;
  s.params.validate();
  if (!o.lexicon.empty()) {
    s.lexicon = read_lexicon_file(o.lexicon, enc);
  } else if (o.default_lexicon) {
    s.lexicon = o.paragraph_anchor ? CueLexicon::builtin_sentence() : CueLexicon::builtin();
  }
  if (!o.paragraph_lexicon.empty()) {
    s.paragraph_lexicon = read_lexicon_file(o.paragraph_lexicon, enc);
  } else if (o.default_lexicon) {
    s.paragraph_lexicon = CueLexicon::builtin_paragraph();
  }

  std::vector<std::string> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      try {
        run_align_job(jobs[k], o, s, enc);
      } catch (const std::exception& e) {
        failures[k] = e.what();
      }
    }
  };
  const unsigned n_threads = std::min<std::size_t>(o.jobs, jobs.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t failed = 0;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    if (failures[k].empty()) continue;
    ++failed;
    if (jobs.size() == 1) throw std::runtime_error(failures[k]);
    err << "bitext: error: " << jobs[k].output << ": " << failures[k] << "\n";
  }
  if (failed > 0) {
    throw std::runtime_error(std::to_string(failed) + " of " + std::to_string(jobs.size()) +
                             " alignments failed");
  }
}

// ---------------------------------------------------------------- evaluate

struct EvaluateOpts {
  std::string output_alignment, gold, region, report, json;
};

nlohmann::ordered_json tally_json(const ClassTally& t) {
  return {{"total", t.total},
          {"correct", t.correct},
          {"incorrect", t.incorrect},
          {"fraction_correct", t.fraction_correct()}};
}

std::string report_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["type1"] = {{"correct", r.gold_correct}, {"total", r.gold_beads}, {"accuracy", r.type1_accuracy}};
  j["type2"] = {{"correct", r.output_one_to_one_correct},
                {"total", r.output_one_to_one},
                {"precision", r.type2_precision}};
  nlohmann::ordered_json per_class = nlohmann::ordered_json::object();
  for (BeadClass cls : kReportedClasses) per_class[to_string(cls)] = tally_json(r.per_class.at(cls));
  per_class["other"] = tally_json(r.other);
  j["per_class"] = per_class;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [cls, n] : r.output_counts) counts[to_string(cls)] = n;
  j["output_counts"] = counts;
  return j.dump(2) + "\n";
}

void cmd_evaluate(const EvaluateOpts& o, std::ostream& out) {
  require_input(o.output_alignment);
  require_input(o.gold);
  if (!o.report.empty()) require_output(o.report);
  if (!o.json.empty()) require_output(o.json);
  std::optional<RegionFilter> region;
  if (!o.region.empty()) region = parse_region(o.region);
  const Alignment output = read_alignment_file(o.output_alignment);
  const Alignment gold = read_alignment_file(o.gold);
  const EvalReport r = evaluate(output, gold, region);
  const std::string table = format_report(r);
  if (o.report.empty()) {
    out << table;
  } else {
    write_file(o.report, table);
  }
  if (!o.json.empty()) write_file(o.json, report_json(r));
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
  std::string english, chinese, gold, encoding = "utf-8";
  std::uint64_t seed = 1;
  std::size_t beads = 500;
  double c = kDefaultC, sigma = kDefaultSigma;
  HybridLength min_length = 20, max_length = 200;
  bool one_to_one = false, header_stretch = false;
  std::size_t stretch_length = 40;
  std::optional<double> cue_rate;
};

void cmd_generate(const GenerateOpts& o) {
  const Encoding enc = encoding_of(o.encoding);
  for (const auto& p : {o.english, o.chinese, o.gold}) require_output(p);
  GenConfig cfg;
  cfg.seed = o.seed;
  cfg.n_beads = o.beads;
  cfg.c = o.c;
  cfg.sigma = o.sigma;
  cfg.min_english_length = o.min_length;
  cfg.max_english_length = o.max_length;
  if (o.one_to_one) cfg.class_mix = {{{1, 1}, 1.0}};
  if (o.header_stretch) {
    HeaderStretch hs;
    hs.length = o.stretch_length;
    cfg.header_stretch = hs;
  }
  if (o.cue_rate) cfg.cue_injection = CueInjection{CueLexicon::builtin_sentence(), *o.cue_rate};
  const GeneratedCorpus g = generate(cfg);
  write_text(o.english, emit_markup(g.english) + U"\n", enc);
  write_text(o.chinese, emit_markup(g.chinese) + U"\n", enc);
  write_file(o.gold, write_alignment(g.gold));
}

// ---------------------------------------------------------------- stats

struct StatsOpts {
  std::string gold, english, chinese, params, scatter, histogram, encoding = "utf-8";
  std::size_t bins = 40;
  double range = 5.0;
};

void cmd_stats(const StatsOpts& o, std::ostream& out) {
  const Encoding enc = encoding_of(o.encoding);
  for (const auto& p : {o.gold, o.english, o.chinese}) require_input(p);
  if (!o.params.empty()) require_input(o.params);
  require_output(o.scatter);
  require_output(o.histogram);
  if (o.bins == 0 || !(o.range > 0.0)) throw std::invalid_argument("--bins and --range must be positive");
  const Alignment gold = read_alignment_file(o.gold);
  const Document e = read_marked(o.english, Language::english, enc);
  const Document c = read_marked(o.chinese, Language::chinese, enc);
  check_covers(gold, e, c, o.gold);
  const LengthModelParams params = o.params.empty() ? LengthModelParams{} : read_params_file(o.params);
  params.validate();

  std::string scatter = "class\tl1\tl2\n";
  for (const Bead& b : gold.beads) {
    scatter += to_string(b.cls) + "\t" + std::to_string(range_length(e, b.eng)) + "\t" +
               std::to_string(range_length(c, b.chi)) + "\n";
  }

  const std::vector<double> deltas = gold_deltas(gold, e, c, params);
  const double width = 2.0 * o.range / static_cast<double>(o.bins);
  std::vector<std::size_t> counts(o.bins, 0);
  std::size_t below = 0, above = 0;
  for (double d : deltas) {
    if (d < -o.range) {
      ++below;
    } else if (d >= o.range) {
      ++above;
    } else {
      counts[std::min(o.bins - 1, static_cast<std::size_t>((d + o.range) / width))]++;
    }
  }
  std::string hist = "lo\thi\tcount\n";
  hist += "-inf\t" + format_double(-o.range) + "\t" + std::to_string(below) + "\n";
  for (std::size_t k = 0; k < o.bins; ++k) {
    const double lo = -o.range + width * static_cast<double>(k);
    hist += format_double(lo) + "\t" + format_double(lo + width) + "\t" + std::to_string(counts[k]) + "\n";
  }
  hist += format_double(o.range) + "\tinf\t" + std::to_string(above) + "\n";

  write_file(o.scatter, scatter);
  write_file(o.histogram, hist);
  const DeltaSummary s = summarize(deltas);
  out << "count\t" << s.count << "\nmean\t" << format_double(s.mean) << "\nvariance\t"
      << format_double(s.variance) << "\n";
}

}  // namespace

std::vector<double> gold_deltas(const Alignment& gold, const Document& english,
                                const Document& chinese, const LengthModelParams& params) {
  std::vector<double> out;
  for (const Bead& b : gold.beads) {
    if (b.eng.empty() || b.chi.empty()) continue;
    out.push_back(delta(static_cast<double>(range_length(english, b.eng)),
                        static_cast<double>(range_length(chinese, b.chi)), params));
  }
  return out;
}

DeltaSummary summarize(const std::vector<double>& values) {
  DeltaSummary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.variance = ss / static_cast<double>(values.size() - 1);
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sentence alignment for English-Chinese parallel text", "bitext"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  const char* enc_help = "Text encoding of marked and raw files: utf-8 or big5";

  SegmentOpts seg;
  auto* s = app.add_subcommand("segment", "Split raw text into <p>/<s> markup");
  s->add_option("-i,--input", seg.input, "Raw text file")->required();
  s->add_option("-o,--output", seg.output, "Marked output file")->required();
  s->add_option("-l,--lang", seg.lang, "Language: en or zh")->required();
  s->add_option("--encoding", seg.encoding, enc_help);

  EstimateOpts est;
  auto* e = app.add_subcommand("estimate", "Estimate length-model parameters from a gold alignment");
  e->add_option("--gold", est.gold, "Gold alignment file")->required();
  e->add_option("--english", est.english, "Marked English file")->required();
  e->add_option("--chinese", est.chinese, "Marked Chinese file")->required();
  e->add_option("-o,--output", est.output, "Parameter file to write")->required();
  e->add_option("--encoding", est.encoding, enc_help);

  AlignOpts al;
  auto* a = app.add_subcommand("align", "Align marked English and Chinese files");
  a->add_option("--english", al.english, "Marked English file");
  a->add_option("--chinese", al.chinese, "Marked Chinese file");
  a->add_option("-o,--output", al.output, "Alignment file to write");
  a->add_option("--manifest", al.manifest, "Batch file of english<TAB>chinese<TAB>output lines");
  a->add_option("-j,--jobs", al.jobs, "Worker threads for --manifest");
  a->add_option("--params", al.params, "Parameter file (defaults built in)");
  a->add_option("--lexicon", al.lexicon, "Cue lexicon file");
  a->add_flag("--default-lexicon", al.default_lexicon, "Use the built-in cue lexicons");
  a->add_option("--paragraph-lexicon", al.paragraph_lexicon, "Cue lexicon for paragraph anchoring");
  a->add_flag("--paragraph-anchor", al.paragraph_anchor, "Align paragraphs first, then sentences");
  a->add_option("--band", al.band, "Restrict the search to a diagonal band of this width");
  a->add_flag("--normalize-priors", al.normalize_priors, "Rescale bead priors to sum to 1");
  a->add_option("--prob-floor", al.prob_floor, "Floor applied to match probabilities");
  a->add_flag("--density", al.density, "Score delta by the normal density, not the two-tailed tail");
  a->add_option("--encoding", al.encoding, enc_help);

  EvaluateOpts ev;
  auto* v = app.add_subcommand("evaluate", "Score an alignment against a gold alignment");
  v->add_option("--alignment", ev.output_alignment, "Alignment to score")->required();
  v->add_option("--gold", ev.gold, "Gold alignment")->required();
  v->add_option("--region", ev.region, "Only beads inside E0..E1,C0..C1");
  v->add_option("--report", ev.report, "Write the table here instead of standard output");
  v->add_option("--json", ev.json, "Also write a JSON report");

  GenerateOpts gen;
  auto* g = app.add_subcommand("generate", "Write a synthetic parallel corpus with gold alignment");
  g->add_option("--english", gen.english, "Marked English file to write")->required();
  g->add_option("--chinese", gen.chinese, "Marked Chinese file to write")->required();
  g->add_option("--gold", gen.gold, "Gold alignment file to write")->required();
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--beads", gen.beads, "Number of ordinary beads");
  g->add_option("--c", gen.c, "Chinese units per English unit");
  g->add_option("--sigma", gen.sigma, "Length noise standard deviation");
  g->add_option("--min-length", gen.min_length, "Shortest English passage");
  g->add_option("--max-length", gen.max_length, "Longest English passage");
  g->add_flag("--one-to-one", gen.one_to_one, "Only 1-1 beads");
  g->add_flag("--header-stretch", gen.header_stretch, "Start with a stretch of equal-length passages");
  g->add_option("--stretch-length", gen.stretch_length, "English passages in the stretch");
  g->add_option("--cue-rate", gen.cue_rate, "Inject matched cues into this fraction of beads");
  g->add_option("--encoding", gen.encoding, enc_help);

  StatsOpts st;
  auto* t = app.add_subcommand("stats", "Emit length scatter and delta histogram data");
  t->add_option("--gold", st.gold, "Gold alignment file")->required();
  t->add_option("--english", st.english, "Marked English file")->required();
  t->add_option("--chinese", st.chinese, "Marked Chinese file")->required();
  t->add_option("--params", st.params, "Parameter file (defaults built in)");
  t->add_option("--scatter", st.scatter, "Scatter TSV to write")->required();
  t->add_option("--histogram", st.histogram, "Histogram TSV to write")->required();
  t->add_option("--bins", st.bins, "Histogram bins");
  t->add_option("--range", st.range, "Histogram covers [-range, range)");
  t->add_option("--encoding", st.encoding, enc_help);

  std::vector<std::string> argv_store{"bitext"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& x : argv_store) argv.push_back(x.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& pe) {
    return app.exit(pe, out, err);
  }

  try {
    if (*s) cmd_segment(seg);
    if (*e) cmd_estimate(est);
    if (*a) cmd_align(al, err);
    if (*v) cmd_evaluate(ev, out);
    if (*g) cmd_generate(gen);
    if (*t) cmd_stats(st, out);
  } catch (const std::exception& ex) {
    err << "bitext: error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace bitext::cli
