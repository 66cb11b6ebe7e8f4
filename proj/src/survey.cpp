#include "edgepow/survey.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "edgepow/patterns.hpp"
#include "edgepow/power2.hpp"
#include "edgepow/ringprops.hpp"

namespace edgepow {

namespace {

constexpr std::size_t kChecks = 7;
constexpr std::array<SurveyCheck, kChecks> kAllChecks{SurveyCheck::Ex1,    SurveyCheck::Ex2,   SurveyCheck::Ex3,
                                                      SurveyCheck::Routes, SurveyCheck::Main2, SurveyCheck::Cor16,
                                                      SurveyCheck::Cor3};

// 0 = not examined, otherwise 1 | value << 1 | consistent << 2
using Outcome = std::uint8_t;
Outcome outcome(bool value, bool consistent) {
  return static_cast<Outcome>(1U | (value ? 2U : 0U) | (consistent ? 4U : 0U));
}

struct GraphRecord {
  std::uint64_t index = 0;
  std::array<Outcome, kChecks> outcomes{};
};

struct WorkerOutput {
  std::vector<GraphRecord> records;
  std::vector<std::pair<std::uint64_t, Discrepancy>> discrepancies;
  std::uint64_t corpus = 0;
};

bool wants(const SurveyOptions& o, SurveyCheck c) {
  return std::find(o.checks.begin(), o.checks.end(), c) != o.checks.end();
}

std::vector<FieldSpec> single_fields(FieldSpec f) {
  if (f.kind() == FieldSpec::Kind::AllFields) return {FieldSpec::char0(), FieldSpec::characteristic(2)};
  return {f};
}

bool cor16_rhs(const Graph& g, FieldSpec field) {
  const SimplicialComplex d = independence_complex(g);
  if (!is_buchsbaum(d, field)) return false;
  const int top = d.dim() + 1;
  const std::uint64_t full = g.vertices().bits();
  for (std::uint64_t sub = 0;;) {
    sub = (sub - full) & full;
    if (sub == 0) break;
    const VertexSet v(sub);
    if (v.size() > top) continue;
    if (!is_buchsbaum(star_union(d, v), field)) return false;
  }
  return true;
}

class GraphChecker {
 public:
  GraphChecker(const SurveyOptions& o, WorkerOutput& out) : o_(o), out_(out) {}

  void run(std::uint64_t index, const Graph& g) {
    GraphRecord rec;
    rec.index = index;
    const int n = g.vertex_count();
    const bool bip = o_.bipartite || bipartition(g).has_value();
    index_ = index;
    g_ = &g;
    for (std::size_t k = 0; k < kChecks; ++k) {
      const SurveyCheck c = kAllChecks[k];
      if (!wants(o_, c)) continue;
      try {
        switch (c) {
          case SurveyCheck::Ex1:
            if (bip) rec.outcomes[k] = ex1();
            break;
          case SurveyCheck::Ex2:
            if (bip) rec.outcomes[k] = ex2();
            break;
          case SurveyCheck::Ex3:
            if (bip) rec.outcomes[k] = ex3();
            break;
          case SurveyCheck::Routes:
            if (n <= o_.heavy_cap) rec.outcomes[k] = routes();
            break;
          case SurveyCheck::Main2:
            if (n <= o_.heavy_cap) rec.outcomes[k] = main2();
            break;
          case SurveyCheck::Cor16:
            if (n <= o_.heavy_cap) rec.outcomes[k] = cor16();
            break;
          case SurveyCheck::Cor3:
            if (n <= o_.generator_cap && g.edge_count() > 0) rec.outcomes[k] = cor3();
            break;
        }
      } catch (const std::exception& e) {
        report(c, std::string("exception: ") + e.what());
        rec.outcomes[k] = outcome(false, false);
      }
    }
    out_.records.push_back(rec);
  }

 private:
  void report(SurveyCheck c, std::string detail) {
    out_.discrepancies.emplace_back(index_, Discrepancy{survey_check_name(c), g_->describe(), std::move(detail)});
  }

  Outcome compare(SurveyCheck c, bool value, bool expected, const char* what) {
    if (value != expected)
      report(c, std::string(what) + " = " + (value ? "true" : "false") + " but the pattern says " +
                    (expected ? "true" : "false"));
    return outcome(value, value == expected);
  }

  Outcome ex1() {
    const bool v = symbolic2_cm(*g_, o_.field, RouteSelection::All).value;
    return compare(SurveyCheck::Ex1, v, is_disjoint_edges(*g_), "symbolic2_cm");
  }

  Outcome ex2() {
    const bool v = symbolic2_buchsbaum(*g_, o_.field).value;
    return compare(SurveyCheck::Ex2, v, is_disjoint_edges(*g_) || is_p4(*g_), "symbolic2_buchsbaum");
  }

  Outcome ex3() {
    const bool v = symbolic2_gcm(*g_, o_.field).value;
    const auto m = complete_bipartite_balanced(*g_);
    const bool expected = is_disjoint_edges(*g_) || is_p4(*g_) || (m && *m >= 2);
    return compare(SurveyCheck::Ex3, v, expected, "symbolic2_gcm");
  }

  Outcome routes() {
    const SymbolicCmRoutes r = symbolic2_cm_routes(*g_, o_.field);
    if (!r.agree())
      report(SurveyCheck::Routes, std::string("special-cm=") + (r.special.value ? "true" : "false") +
                                      " star-union=" + (r.star_union.value ? "true" : "false") +
                                      " delta-v-oracle=" + (r.delta_v.value ? "true" : "false"));
    return outcome(r.special.value, r.agree());
  }

  Outcome main2() {
    if (!symbolic2_gcm(*g_, o_.field).value) return 0;
    bool ok = true;
    for (FieldSpec f : single_fields(o_.field)) {
      if (!symbolic2_gcm(*g_, f).value) continue;
      const Main2Support s = verify_main2_support(*g_, f);
      if (!s.holds) {
        ok = false;
        report(SurveyCheck::Main2, "over " + f.to_string() + ": H^" + std::to_string(s.violation->i) + " nonzero at " +
                                       s.violation->a.to_string());
      }
    }
    return outcome(true, ok);
  }

  Outcome cor16() {
    const bool lhs = symbolic2_gcm(*g_, o_.field).value;
    const bool rhs = cor16_rhs(*g_, o_.field);
    if (lhs != rhs)
      report(SurveyCheck::Cor16, std::string("symbolic2_gcm = ") + (lhs ? "true" : "false") +
                                     " but the star-union Buchsbaum condition is " + (rhs ? "true" : "false"));
    return outcome(lhs, lhs == rhs);
  }

  Outcome cor3() {
    const auto ordinary = ordinary_power_generators(*g_, 2).generators();
    const auto symbolic = minimal_generators_of_components(symbolic_square(*g_), 2).generators();
    const bool equal = ordinary == symbolic;
    const bool expected = !has_triangle(*g_);
    if (equal != expected)
      report(SurveyCheck::Cor3, std::string("generator sets ") + (equal ? "agree" : "differ") + " but triangle-free is " +
                                    (expected ? "true" : "false"));
    return outcome(equal, equal == expected);
  }

  const SurveyOptions& o_;
  WorkerOutput& out_;
  std::uint64_t index_ = 0;
  const Graph* g_ = nullptr;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::string survey_check_name(SurveyCheck c) {
  switch (c) {
    case SurveyCheck::Ex1: return "ex1";
    case SurveyCheck::Ex2: return "ex2";
    case SurveyCheck::Ex3: return "ex3";
    case SurveyCheck::Routes: return "routes";
    case SurveyCheck::Main2: return "main2";
    case SurveyCheck::Cor16: return "cor16";
    case SurveyCheck::Cor3: return "cor3";
  }
  return "?";
}

std::vector<SurveyCheck> parse_survey_checks(std::string_view text) {
  std::vector<SurveyCheck> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (item == "all") {
      out.assign(kAllChecks.begin(), kAllChecks.end());
    } else {
      const auto it = std::find_if(kAllChecks.begin(), kAllChecks.end(),
                                   [&](SurveyCheck c) { return survey_check_name(c) == item; });
      if (it == kAllChecks.end()) throw ParseError("unknown survey check '" + std::string(item) + "'");
      if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

int survey_cap_from_env(int fallback) {
  const char* raw = std::getenv("EDGEPOW_MAX_N");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0 || v > VertexSet::kMaxLabel)
    throw ParseError("EDGEPOW_MAX_N must be an integer in 0.." + std::to_string(VertexSet::kMaxLabel));
  return static_cast<int>(v);
}

SurveyResult run_survey(const SurveyOptions& options) {
  if (options.max_n > options.cap)
    throw std::invalid_argument("survey: --max-n " + std::to_string(options.max_n) + " exceeds the cap " +
                                std::to_string(options.cap) + " (raise it with EDGEPOW_MAX_N)");
  if (options.min_n < 0 || options.min_n > options.max_n) throw std::invalid_argument("survey: empty vertex range");
  if (options.workers < 1) throw std::invalid_argument("survey: need at least one worker");

  SurveyResult result;
  result.options = options;
  std::array<std::uint64_t, kChecks> hash{};
  hash.fill(1469598103934665603ULL);
  std::array<CheckSummary, kChecks> sums{};

  for (int n = options.min_n; n <= options.max_n; ++n) {
    const auto workers = static_cast<std::size_t>(options.workers);
    std::vector<WorkerOutput> outputs(workers);
    auto work = [&](std::size_t w) {
      GraphChecker checker(options, outputs[w]);
      std::uint64_t index = 0;
      for_each_graph(
          n, options.bipartite,
          [&](const Graph& g) {
            if (!options.include_isolated && !g.isolated_vertices().empty()) return;
            const std::uint64_t mine = index++;
            ++outputs[w].corpus;
            if (mine % workers == w) checker.run(mine, g);
          },
          options.cap);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
      for (auto& t : threads) t.join();
    }

    std::vector<GraphRecord> records;
    std::vector<std::pair<std::uint64_t, Discrepancy>> disc;
    for (auto& o : outputs) {
      records.insert(records.end(), o.records.begin(), o.records.end());
      disc.insert(disc.end(), o.discrepancies.begin(), o.discrepancies.end());
    }
    std::sort(records.begin(), records.end(),
              [](const GraphRecord& a, const GraphRecord& b) { return a.index < b.index; });
    std::stable_sort(disc.begin(), disc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    const std::uint64_t corpus = outputs.front().corpus;
    result.graphs += corpus;
    result.graphs_per_n[n] = corpus;
    for (const GraphRecord& r : records)
      for (std::size_t k = 0; k < kChecks; ++k) {
        const Outcome oc = r.outcomes[k];
        if (oc == 0) continue;
        ++sums[k].examined;
        if (oc & 2U) ++sums[k].positives;
        if (!(oc & 4U)) ++sums[k].discrepancies;
        for (std::uint64_t byte : {static_cast<std::uint64_t>(n), r.index, static_cast<std::uint64_t>(oc)}) {
          for (int s = 0; s < 64; s += 8) {
            hash[k] ^= (byte >> s) & 0xFFU;
            hash[k] *= 1099511628211ULL;
          }
        }
      }
    for (auto& d : disc) result.discrepancies.push_back(std::move(d.second));
  }

  for (std::size_t k = 0; k < kChecks; ++k) {
    if (!wants(options, kAllChecks[k])) continue;
    sums[k].check = survey_check_name(kAllChecks[k]);
    sums[k].digest = hex64(hash[k]);
    result.summaries.push_back(sums[k]);
  }
  return result;
}

Json survey_to_json(const SurveyResult& result) {
  const SurveyOptions& o = result.options;
  Json checks = Json::array();
  for (SurveyCheck c : o.checks) checks.push_back(survey_check_name(c));
  Json per_n = Json::object();
  for (const auto& [n, count] : result.graphs_per_n) per_n[std::to_string(n)] = count;
  Json corpus = {{"min_n", o.min_n},
                 {"max_n", o.max_n},
                 {"bipartite", o.bipartite},
                 {"include_isolated", o.include_isolated},
                 {"field", o.field.to_string()},
                 {"heavy_cap", o.heavy_cap},
                 {"generator_cap", o.generator_cap},
                 {"checks", checks},
                 {"graphs", result.graphs},
                 {"graphs_per_n", per_n}};
  Json summaries = Json::array();
  for (const CheckSummary& s : result.summaries)
    summaries.push_back({{"check", s.check},
                         {"examined", s.examined},
                         {"positives", s.positives},
                         {"discrepancies", s.discrepancies},
                         {"digest", s.digest}});
  Json disc = Json::array();
  for (const Discrepancy& d : result.discrepancies)
    disc.push_back({{"check", d.check}, {"graph", d.graph}, {"detail", d.detail}});
  return {{"corpus", corpus}, {"summaries", summaries}, {"discrepancies", disc}};
}

}  // namespace edgepow
