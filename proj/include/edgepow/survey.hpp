#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "edgepow/field_spec.hpp"
#include "edgepow/graph.hpp"
#include "edgepow/io.hpp"

namespace edgepow {

/// ex1/ex2/ex3: bipartite classifications of the symbolic square (CM,
/// Buchsbaum, gCM) against structural pattern matchers.
/// routes: the three CM routes agree.
/// main2: local cohomology support of gCM instances.
/// cor16: gCM against Buchsbaumness of Delta and the star unions.
/// cor3: I(G)^2 and I(G)^(2) have the same generators iff G is triangle-free.
enum class SurveyCheck { Ex1, Ex2, Ex3, Routes, Main2, Cor16, Cor3 };

std::string survey_check_name(SurveyCheck c);
/// "ex1", ..., "cor3", or "all"; comma-separated lists allowed. Throws ParseError.
std::vector<SurveyCheck> parse_survey_checks(std::string_view text);

/// Default cap on the corpus size, overridable through EDGEPOW_MAX_N.
inline constexpr int kSurveyCap = kDefaultEnumerationCap;
/// routes, main2 and cor16 only look at graphs up to this many vertices unless raised.
inline constexpr int kHeavyCheckCap = 6;
/// cor3 only looks at graphs up to this many vertices unless raised.
inline constexpr int kGeneratorCheckCap = 7;

struct SurveyOptions {
  int min_n = 1;
  int max_n = 6;
  bool bipartite = false;
  /// Keep graphs with isolated vertices in the corpus.
  bool include_isolated = false;
  std::vector<SurveyCheck> checks;
  FieldSpec field = FieldSpec::all_fields();
  int workers = 1;
  int cap = kSurveyCap;
  int heavy_cap = kHeavyCheckCap;
  int generator_cap = kGeneratorCheckCap;
};

/// Reads EDGEPOW_MAX_N; returns fallback when unset. Throws ParseError when malformed.
int survey_cap_from_env(int fallback = kSurveyCap);

struct CheckSummary {
  std::string check;
  std::uint64_t examined = 0;
  /// Graphs on which the decided property holds.
  std::uint64_t positives = 0;
  std::uint64_t discrepancies = 0;
  /// FNV-1a over per-graph outcomes in corpus order.
  std::string digest;
  bool operator==(const CheckSummary&) const = default;
};

struct Discrepancy {
  std::string check;
  std::string graph;
  std::string detail;
  bool operator==(const Discrepancy&) const = default;
};

struct SurveyResult {
  SurveyOptions options;
  std::uint64_t graphs = 0;
  std::map<int, std::uint64_t> graphs_per_n;
  std::vector<CheckSummary> summaries;
  std::vector<Discrepancy> discrepancies;
};

/// Throws std::invalid_argument when max_n exceeds the cap.
SurveyResult run_survey(const SurveyOptions& options);

Json survey_to_json(const SurveyResult& result);

}  // namespace edgepow
