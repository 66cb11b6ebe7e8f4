#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "edgepow/complex.hpp"
#include "edgepow/example_ideal.hpp"
#include "edgepow/graph.hpp"
#include "edgepow/homology.hpp"
#include "edgepow/ideals.hpp"
#include "edgepow/power2.hpp"

namespace edgepow {

using Json = nlohmann::ordered_json;

/// Malformed input text or JSON; the message carries the line when known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::filesystem::path& path);

/// "n <count>" then one "u v" per line; blank lines and '#' comments are skipped.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g);

/// One facet per line, or the single line "VOID" / "IRRELEVANT". The ground
/// set is the union of the facets.
SimplicialComplex parse_complex_text(std::string_view text);
std::string format_complex_text(const SimplicialComplex& d);

/// {"n": int, "components": [{"F": [..], "m": int}]} or {"n": int, "generators": [[..]]}.
MonomialIdeal parse_ideal_json(std::string_view text);
Json ideal_to_json(const MonomialIdeal& ideal);

/// Comma- or whitespace-separated integers, e.g. "1,1,0,0".
DegreeVector parse_degree_vector(std::string_view text);

Json vertex_set_to_json(VertexSet s);
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& d);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);
Json report_to_json(const ClassificationReport& r);
/// Inverse of report_to_json; throws ParseError on malformed input.
ClassificationReport report_from_json(const Json& j);

Json homology_to_json(const HomologyProfile& h, FieldSpec field);
Json example_decision_to_json(const ExampleIdealDecision& d);

}  // namespace edgepow
