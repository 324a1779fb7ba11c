#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bitext/aligner.hpp"
#include "bitext/evaluator.hpp"
#include "bitext/formats.hpp"
#include "bitext/length_metric.hpp"
#include "bitext/segmenter.hpp"
#include "bitext/synth.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace bitext;

namespace {

py::tuple class_tuple(BeadClass c) { return py::make_tuple(c.a, c.b); }

BeadClass tuple_class(const py::handle& t) {
  auto pair = t.cast<std::pair<int, int>>();
  return {pair.first, pair.second};
}

py::dict priors_dict(const LengthModelParams& p) {
  py::dict d;
  for (const auto& [cls, v] : p.priors) d[class_tuple(cls)] = v;
  return d;
}

void set_priors(LengthModelParams& p, const py::dict& d) {
  std::map<BeadClass, double> priors;
  for (auto [k, v] : d) priors[tuple_class(k)] = v.cast<double>();
  p.priors = std::move(priors);
}

Document make_document(Language lang, const std::vector<std::vector<std::u32string>>& paragraphs) {
  DocumentBuilder b(lang);
  for (const auto& para : paragraphs) {
    b.begin_paragraph();
    for (const auto& text : para) b.add(text);
  }
  return std::move(b).build();
}

py::dict tally_dict(const ClassTally& t) {
  py::dict d;
  d["total"] = t.total;
  d["correct"] = t.correct;
  d["incorrect"] = t.incorrect;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "English-Chinese sentence alignment";

  py::enum_<Language>(m, "Language").value("english", Language::english).value("chinese", Language::chinese);
  py::enum_<PassageKind>(m, "PassageKind")
      .value("sentence", PassageKind::sentence)
      .value("heading", PassageKind::heading)
      .value("list_item", PassageKind::list_item)
      .value("other", PassageKind::other);
  py::enum_<MatchProbability>(m, "MatchProbability")
      .value("two_tailed", MatchProbability::two_tailed)
      .value("density", MatchProbability::density);

  m.def("hybrid_length", [](const std::u32string& s) { return hybrid_length(s); });

  py::class_<Passage>(m, "Passage")
      .def_property_readonly("id", &Passage::id)
      .def_property_readonly("text", &Passage::text)
      .def_property_readonly("kind", &Passage::kind)
      .def_property_readonly("length", &Passage::length);

  py::class_<Document>(m, "Document")
      .def(py::init(&make_document), py::arg("lang"), py::arg("paragraphs"),
           "Builds a document from a list of paragraphs, each a list of passage texts.")
      .def_property_readonly("lang", &Document::lang)
      .def_property_readonly("passages", &Document::passages)
      .def_property_readonly("paragraph_breaks", &Document::paragraph_breaks)
      .def("__len__", &Document::size);

  m.def("segment", [](const std::u32string& raw, Language lang) { return segment(raw, lang); });
  m.def("parse_markup", [](const std::u32string& s, Language lang) { return parse_markup(s, lang); });
  m.def("emit_markup", &emit_markup);

  py::class_<LengthModelParams>(m, "LengthModelParams")
      .def(py::init<>())
      .def_readwrite("c", &LengthModelParams::c)
      .def_readwrite("sigma2", &LengthModelParams::sigma2)
      .def_readwrite("form", &LengthModelParams::form)
      .def_readwrite("probability_floor", &LengthModelParams::probability_floor)
      .def_property("priors", &priors_dict, &set_priors)
      .def("validate", &LengthModelParams::validate)
      .def("with_normalized_priors", &LengthModelParams::with_normalized_priors)
      .def("to_text", [](const LengthModelParams& p) { return write_params(p); })
      .def_static("from_text", [](const std::string& s) { return read_params(s); });

  m.def(
      "estimate_params",
      [](const std::vector<std::pair<HybridLength, HybridLength>>& pairs) {
        std::vector<LengthPair> v;
        for (auto [a, b] : pairs) v.push_back({a, b});
        return estimate_params(v);
      },
      py::arg("pairs"));
  m.def("delta", &delta, py::arg("l1"), py::arg("l2"), py::arg("params") = LengthModelParams{});
  m.def(
      "match_cost",
      [](HybridLength l1, HybridLength l2, const py::tuple& cls, const LengthModelParams& p) {
        return match_cost(l1, l2, tuple_class(cls), p);
      },
      py::arg("l1"), py::arg("l2"), py::arg("cls"), py::arg("params") = LengthModelParams{});

  py::class_<CueLexicon>(m, "CueLexicon")
      .def(py::init([](const std::vector<std::pair<std::u32string, std::u32string>>& cues, double variance) {
             std::vector<Cue> v;
             for (auto& [e, c] : cues) v.push_back({e, c});
             return CueLexicon(std::move(v), variance);
           }),
           py::arg("cues") = std::vector<std::pair<std::u32string, std::u32string>>{},
           py::arg("variance") = kDefaultCueVariance)
      .def_property_readonly("variance", &CueLexicon::variance)
      .def_property_readonly("cues",
                             [](const CueLexicon& l) {
                               std::vector<std::pair<std::u32string, std::u32string>> out;
                               for (const Cue& c : l.cues()) out.emplace_back(c.english, c.chinese);
                               return out;
                             })
      .def("__len__", &CueLexicon::size)
      .def_static("builtin", &CueLexicon::builtin)
      .def_static("builtin_paragraph", &CueLexicon::builtin_paragraph)
      .def_static("builtin_sentence", &CueLexicon::builtin_sentence);

  py::class_<Bead>(m, "Bead")
      .def(py::init([](const py::tuple& cls, std::size_t e, std::size_t c) { return Bead::at(tuple_class(cls), e, c); }),
           py::arg("cls"), py::arg("eng_begin"), py::arg("chi_begin"))
      .def_property_readonly("cls", [](const Bead& b) { return class_tuple(b.cls); })
      .def_property_readonly("eng", [](const Bead& b) { return py::make_tuple(b.eng.begin, b.eng.end); })
      .def_property_readonly("chi", [](const Bead& b) { return py::make_tuple(b.chi.begin, b.chi.end); })
      .def("__eq__", [](const Bead& a, const Bead& b) { return a == b; })
      .def("__repr__", [](const Bead& b) {
        std::ostringstream ss;
        ss << "Bead(" << to_string(b.cls) << ", eng=" << b.eng.begin << ".." << b.eng.end << ", chi=" << b.chi.begin
           << ".." << b.chi.end << ")";
        return ss.str();
      });

  py::class_<Alignment>(m, "Alignment")
      .def(py::init<>())
      .def_readwrite("beads", &Alignment::beads)
      .def_readonly("total_cost", &Alignment::total_cost)
      .def("to_text", [](const Alignment& a) { return write_alignment(a); })
      .def_static("from_text", [](const std::string& s) { return read_alignment(s); });

  m.def(
      "align",
      [](const Document& e, const Document& c, const LengthModelParams& p, const CueLexicon& lex,
         std::optional<std::size_t> band) {
        py::gil_scoped_release release;
        return band ? align_banded(e, c, p, lex, *band) : align(e, c, p, lex);
      },
      py::arg("english"), py::arg("chinese"), py::arg("params") = LengthModelParams{},
      py::arg("lexicon") = CueLexicon{}, py::arg("band") = py::none());
  m.def(
      "align_anchored",
      [](const Document& e, const Document& c, const LengthModelParams& p, const CueLexicon& para,
         const CueLexicon& sent) {
        py::gil_scoped_release release;
        return align_anchored(e, c, p, para, sent);
      },
      py::arg("english"), py::arg("chinese"), py::arg("params") = LengthModelParams{},
      py::arg("paragraph_lexicon") = CueLexicon::builtin_paragraph(),
      py::arg("sentence_lexicon") = CueLexicon::builtin_sentence());
  m.def("align_bruteforce", &align_bruteforce, py::arg("english"), py::arg("chinese"),
        py::arg("params") = LengthModelParams{}, py::arg("lexicon") = CueLexicon{});

  m.def(
      "evaluate",
      [](const Alignment& out, const Alignment& gold) {
        const EvalReport r = evaluate(out, gold);
        py::dict d;
        d["type1"] = r.type1_accuracy;
        d["type2"] = r.type2_precision;
        d["gold_beads"] = r.gold_beads;
        d["gold_correct"] = r.gold_correct;
        d["output_one_to_one"] = r.output_one_to_one;
        d["output_one_to_one_correct"] = r.output_one_to_one_correct;
        py::dict per;
        for (const auto& [cls, t] : r.per_class) per[class_tuple(cls)] = tally_dict(t);
        d["per_class"] = per;
        d["other"] = tally_dict(r.other);
        d["table"] = format_report(r);
        return d;
      },
      py::arg("output"), py::arg("gold"));

  m.def(
      "generate",
      [](std::uint64_t seed, std::size_t n_beads, double c, double sigma, bool one_to_one, bool header_stretch,
         std::optional<double> cue_rate) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.n_beads = n_beads;
        cfg.c = c;
        cfg.sigma = sigma;
        if (one_to_one) cfg.class_mix = {{{1, 1}, 1.0}};
        if (header_stretch) cfg.header_stretch = HeaderStretch{};
        if (cue_rate) cfg.cue_injection = CueInjection{CueLexicon::builtin_sentence(), *cue_rate};
        GeneratedCorpus g = generate(cfg);
        return py::make_tuple(std::move(g.english), std::move(g.chinese), std::move(g.gold), g.header_beads);
      },
      py::arg("seed") = 1, py::arg("n_beads") = 500, py::arg("c") = kDefaultC, py::arg("sigma") = kDefaultSigma,
      py::arg("one_to_one") = false, py::arg("header_stretch") = false, py::arg("cue_rate") = py::none(),
      "Returns (english, chinese, gold, header_beads).");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int status;
        {
          py::gil_scoped_release release;
          status = cli::run(args, out, err);
        }
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Runs a bitext command line; returns (status, stdout, stderr).");
}
