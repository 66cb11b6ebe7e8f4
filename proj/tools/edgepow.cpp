#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "edgepow/example_ideal.hpp"
#include "edgepow/homology.hpp"
#include "edgepow/ideals.hpp"
#include "edgepow/io.hpp"
#include "edgepow/power2.hpp"
#include "edgepow/survey.hpp"

using namespace edgepow;

namespace {

enum Exit : int { kOk = 0, kDiscrepancy = 1, kParse = 2, kIsolated = 3, kRoutes = 4 };

FieldSpec field_arg(const std::string& text) {
  try {
    return FieldSpec::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

const char* yes_no(bool v) { return v ? "yes" : "no"; }

int run_classify(const std::string& path, const std::string& field, const std::string& routes, bool allow_isolated) {
  ClassifyOptions opts;
  opts.field = field_arg(field);
  opts.routes = routes == "fast" ? RouteSelection::Fast : RouteSelection::All;
  opts.allow_isolated = allow_isolated;
  const Graph g = parse_graph_text(read_text_file(path));
  const ClassificationReport report = classify(g, opts);
  emit(report_to_json(report));
  std::cerr << g.describe() << " over " << opts.field.to_string() << '\n';
  for (const std::string& key : report_property_keys()) {
    const Verdict& v = report.at(key);
    std::cerr << "  " << key << ": " << yes_no(v.value);
    if (!v.value && !v.witness.clause.empty()) std::cerr << "  (" << v.witness.clause << ")";
    std::cerr << '\n';
  }
  for (const std::string& note : report.notes) std::cerr << "  note: " << note << '\n';
  return kOk;
}

int run_survey_cmd(SurveyOptions opts, const std::string& checks, const std::string& field) {
  opts.checks = parse_survey_checks(checks);
  opts.field = field_arg(field);
  opts.cap = survey_cap_from_env();
  if (opts.max_n > opts.cap) {
    std::cerr << "survey: --max-n " << opts.max_n << " exceeds the cap " << opts.cap
              << " (set EDGEPOW_MAX_N to raise it)\n";
    return kParse;
  }
  const SurveyResult r = run_survey(opts);
  emit(survey_to_json(r));
  std::cerr << "surveyed " << r.graphs << " graphs on " << opts.min_n << ".." << opts.max_n << " vertices"
            << (opts.bipartite ? " (bipartite)" : "") << '\n';
  for (const CheckSummary& s : r.summaries)
    std::cerr << "  " << s.check << ": examined " << s.examined << ", positive " << s.positives << ", discrepancies "
              << s.discrepancies << '\n';
  for (const Discrepancy& d : r.discrepancies)
    std::cerr << "  [" << d.check << "] " << d.graph << ": " << d.detail << '\n';
  return r.discrepancies.empty() ? kOk : kDiscrepancy;
}

int run_homology(const std::string& path, const std::string& field) {
  const FieldSpec f = field_arg(field);
  const SimplicialComplex d = parse_complex_text(read_text_file(path));
  const HomologyProfile h = reduced_homology(d);
  Json out = homology_to_json(h, f);
  out["complex"] = complex_to_json(d);
  emit(out);
  std::cerr << d.to_string() << '\n';
  for (int j = -1; j <= h.max_degree(); ++j) {
    std::cerr << "  H~_" << j << ": rank " << h.free_rank(j);
    if (!h.torsion(j).empty()) {
      std::cerr << ", torsion";
      for (const BigInt& t : h.torsion(j)) std::cerr << " Z/" << t;
    }
    std::cerr << '\n';
  }
  return kOk;
}

int run_degree_complex(const std::string& path, const std::string& a_text) {
  const MonomialIdeal ideal = parse_ideal_json(read_text_file(path));
  const DegreeVector a = parse_degree_vector(a_text);
  if (static_cast<int>(a.size()) != ideal.variable_count())
    throw ParseError("--a has " + std::to_string(a.size()) + " entries, the ideal has " +
                     std::to_string(ideal.variable_count()) + " variables");
  const SimplicialComplex d = degree_complex(ideal, a);
  Json out;
  out["a"] = a.values();
  out["complex"] = complex_to_json(d);
  emit(out);
  std::cerr << "degree complex at " << a.to_string() << ": " << d.to_string() << '\n';
  return kOk;
}

int run_example(int a, int b, int c, int d) {
  if (a < 0 || b < 0 || c < 0 || d < 0 || a + b + c + d == 0)
    throw ParseError("example-ideal needs nonnegative exponents, not all zero");
  const ExampleIdealDecision r = example_ideal_decision(a, b, c, d);
  emit(example_decision_to_json(r));
  std::cerr << "exponents (" << a << "," << b << "," << c << "," << d << "): gCM " << yes_no(r.gcm_by_systems)
            << ", CM " << yes_no(r.cm) << ", systems and enumeration "
            << (r.gcm_by_systems == r.gcm_by_enumeration ? "agree" : "DISAGREE") << '\n';
  if (r.witness_system) std::cerr << "  witness system " << *r.witness_system << '\n';
  if (r.witness_point) std::cerr << "  witness point " << r.witness_point->to_string() << '\n';
  return r.gcm_by_systems == r.gcm_by_enumeration && r.fm_disagreements.empty() ? kOk : kDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay type classification of second powers of edge ideals"};
  app.require_subcommand(1);

  std::string path, field = "all", routes = "all", checks = "all", a_text;
  bool allow_isolated = false;
  SurveyOptions survey;
  int ea = 0, eb = 0, ec = 0, ed = 0;

  auto* classify_cmd = app.add_subcommand("classify", "classify S/I(G)^(2) and S/I(G)^2 for a graph file");
  classify_cmd->add_option("graph", path, "graph text file")->required();
  classify_cmd->add_option("--char", field, "characteristic: all, 0 or a prime");
  classify_cmd->add_option("--routes", routes, "all or fast")->check(CLI::IsMember({"all", "fast"}));
  classify_cmd->add_flag("--allow-isolated", allow_isolated, "accept graphs with isolated vertices");

  auto* survey_cmd = app.add_subcommand("survey", "exhaustive check over small labeled graphs");
  survey_cmd->add_option("--max-n", survey.max_n, "largest vertex count");
  survey_cmd->add_option("--min-n", survey.min_n, "smallest vertex count");
  survey_cmd->add_flag("--bipartite", survey.bipartite, "bipartite graphs only");
  survey_cmd->add_option("--check", checks, "ex1,ex2,ex3,routes,main2,cor16,cor3 or all");
  survey_cmd->add_option("--workers", survey.workers, "worker threads")->check(CLI::PositiveNumber);
  survey_cmd->add_option("--char", field, "characteristic: all, 0 or a prime");
  survey_cmd->add_option("--heavy-cap", survey.heavy_cap, "vertex limit for routes, main2 and cor16");
  survey_cmd->add_option("--generator-cap", survey.generator_cap, "vertex limit for cor3");
  survey_cmd->add_flag("--include-isolated", survey.include_isolated, "keep graphs with isolated vertices");

  auto* homology_cmd = app.add_subcommand("homology", "reduced homology of a complex file");
  homology_cmd->add_option("complex", path, "complex text file")->required();
  homology_cmd->add_option("--char", field, "characteristic: all, 0 or a prime");

  auto* degree_cmd = app.add_subcommand("degree-complex", "degree complex of an ideal at a multidegree");
  degree_cmd->add_option("ideal", path, "ideal JSON file")->required();
  degree_cmd->add_option("--a", a_text, "multidegree, e.g. 1,1,0,0")->required();

  auto* example_cmd = app.add_subcommand("example-ideal", "decide the four-component example ideal");
  example_cmd->add_option("a", ea)->required();
  example_cmd->add_option("b", eb)->required();
  example_cmd->add_option("c", ec)->required();
  example_cmd->add_option("d", ed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*classify_cmd) return run_classify(path, field, routes, allow_isolated);
    if (*survey_cmd) return run_survey_cmd(survey, checks, field);
    if (*homology_cmd) return run_homology(path, field);
    if (*degree_cmd) return run_degree_complex(path, a_text);
    if (*example_cmd) return run_example(ea, eb, ec, ed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IsolatedVerticesError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIsolated;
  } catch (const RouteDisagreement& e) {
    std::cerr << "route disagreement: " << e.what() << '\n';
    return kRoutes;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDiscrepancy;
  }
  return kOk;
}
