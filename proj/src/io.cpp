#include "edgepow/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <fstream>
#include <sstream>

namespace edgepow {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Lines with comments removed, paired with their 1-based numbers; blank lines dropped.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) out.emplace_back(number, line);
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int to_int(std::string_view tok, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(tok) + "'");
  return value;
}

Json set_list(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(vertex_set_to_json(s));
  return out;
}

VertexSet vertex_set_from_json(const Json& j) {
  VertexSet s;
  for (const auto& v : j) s.insert(v.get<int>());
  return s;
}

std::string kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::None: return "none";
    case Witness::Kind::Edge: return "edge";
    case Witness::Kind::Vertex: return "vertex";
    case Witness::Kind::Face: return "face";
    case Witness::Kind::Degree: return "degree";
  }
  return "none";
}

Witness::Kind kind_from_name(const std::string& s) {
  if (s == "none") return Witness::Kind::None;
  if (s == "edge") return Witness::Kind::Edge;
  if (s == "vertex") return Witness::Kind::Vertex;
  if (s == "face") return Witness::Kind::Face;
  if (s == "degree") return Witness::Kind::Degree;
  throw ParseError("unknown witness kind '" + s + "'");
}

Json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json gamma_list(const std::vector<std::vector<VertexSet>>& gammas) {
  Json out = Json::array();
  for (const auto& g : gammas) out.push_back(set_list(g));
  return out;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph parse_graph_text(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("graph file is empty; expected 'n <count>'");
  const auto header = tokens(lines.front().second);
  if (header.size() != 2 || header[0] != "n")
    throw ParseError("line " + std::to_string(lines.front().first) + ": expected 'n <count>'");
  const int n = to_int(header[1], lines.front().first);
  if (n < 0 || n > VertexSet::kMaxLabel)
    throw ParseError("line " + std::to_string(lines.front().first) + ": vertex count out of range");
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [number, line] = lines[k];
    const auto t = tokens(line);
    if (t.size() != 2) throw ParseError("line " + std::to_string(number) + ": expected 'u v'");
    const int u = to_int(t[0], number);
    const int v = to_int(t[1], number);
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("line " + std::to_string(number) + ": vertex outside 1.." + std::to_string(n));
    if (u == v) throw ParseError("line " + std::to_string(number) + ": loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

std::string format_graph_text(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertices().max()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

SimplicialComplex parse_complex_text(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("complex file is empty; write VOID for the void complex");
  if (lines.size() == 1 && lines.front().second == "VOID") return SimplicialComplex::void_complex();
  if (lines.size() == 1 && lines.front().second == "IRRELEVANT") return SimplicialComplex::irrelevant();
  std::vector<VertexSet> facets;
  for (const auto& [number, line] : lines) {
    if (line == "VOID" || line == "IRRELEVANT")
      throw ParseError("line " + std::to_string(number) + ": " + std::string(line) + " must be the only line");
    VertexSet f;
    for (std::string_view tok : tokens(line)) {
      const int v = to_int(tok, number);
      if (v < 1 || v > VertexSet::kMaxLabel)
        throw ParseError("line " + std::to_string(number) + ": vertex label out of range");
      f.insert(v);
    }
    facets.push_back(f);
  }
  return SimplicialComplex::generated_by(std::move(facets));
}

std::string format_complex_text(const SimplicialComplex& d) {
  if (d.is_void()) return "VOID\n";
  if (d.is_irrelevant()) return "IRRELEVANT\n";
  std::string out;
  for (VertexSet f : d.facets()) {
    bool first = true;
    for (int v : f) {
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

MonomialIdeal parse_ideal_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("ideal JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("n")) throw ParseError("ideal JSON: expected an object with \"n\"");
    const int n = j.at("n").get<int>();
    const bool has_c = j.contains("components");
    const bool has_g = j.contains("generators");
    if (has_c == has_g) throw ParseError("ideal JSON: give exactly one of \"components\" or \"generators\"");
    if (has_c) {
      std::vector<Component> cs;
      for (const auto& c : j.at("components")) cs.push_back({vertex_set_from_json(c.at("F")), c.at("m").get<int>()});
      return MonomialIdeal::from_components(n, std::move(cs));
    }
    std::vector<ExponentVector> gens;
    for (const auto& g : j.at("generators")) gens.push_back(g.get<std::vector<int>>());
    return MonomialIdeal::from_generators(n, std::move(gens));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("ideal JSON: ") + e.what());
  }
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json j;
  j["n"] = ideal.variable_count();
  if (ideal.form() == MonomialIdeal::Form::Components) {
    Json cs = Json::array();
    for (const Component& c : ideal.components()) cs.push_back({{"F", vertex_set_to_json(c.facet)}, {"m", c.exponent}});
    j["components"] = cs;
  } else {
    j["generators"] = ideal.generators();
  }
  return j;
}

DegreeVector parse_degree_vector(std::string_view text) {
  std::string s(text);
  // a comma with nothing but blanks since the previous separator is an empty entry
  bool pending = true;
  for (char& c : s) {
    if (c == ',') {
      if (pending) throw ParseError("degree vector has an empty entry");
      pending = true;
      c = ' ';
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      pending = false;
    }
  }
  if (pending && s.find(',') != std::string::npos) throw ParseError("degree vector has an empty entry");
  std::vector<int> a;
  for (std::string_view tok : tokens(s)) a.push_back(to_int(tok, 1));
  if (a.empty()) throw ParseError("degree vector is empty");
  return DegreeVector(std::move(a));
}

Json vertex_set_to_json(VertexSet s) { return s.to_vector(); }

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", vertex_set_to_json(g.vertices())}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (e.size() != 2) throw ParseError("graph JSON: edge must have two endpoints");
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return Graph(vertex_set_from_json(j.at("vertices")), edges);
}

Json complex_to_json(const SimplicialComplex& d) {
  if (d.is_void()) return "VOID";
  if (d.is_irrelevant()) return "IRRELEVANT";
  return set_list(d.facets());
}

Json witness_to_json(const Witness& w) {
  if (w == Witness{}) return nullptr;
  Json j;
  j["kind"] = kind_name(w.kind);
  j["edge"] = w.edge ? Json{w.edge->u, w.edge->v} : Json(nullptr);
  j["vertex"] = w.vertex ? Json(*w.vertex) : Json(nullptr);
  j["set"] = w.set ? vertex_set_to_json(*w.set) : Json(nullptr);
  j["clause"] = w.clause;
  j["detail"] = w.detail;
  return j;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  if (j.is_null()) return w;
  w.kind = kind_from_name(j.at("kind").get<std::string>());
  if (!j.at("edge").is_null()) w.edge = Edge(j.at("edge").at(0).get<int>(), j.at("edge").at(1).get<int>());
  if (!j.at("vertex").is_null()) w.vertex = j.at("vertex").get<int>();
  if (!j.at("set").is_null()) w.set = vertex_set_from_json(j.at("set"));
  w.clause = j.at("clause").get<std::string>();
  w.detail = j.at("detail").get<std::string>();
  return w;
}

Json report_to_json(const ClassificationReport& r) {
  Json j;
  j["graph"] = graph_to_json(r.graph);
  j["field"] = r.field.to_string();
  Json props = Json::object();
  for (const std::string& key : report_property_keys()) {
    const auto it = r.properties.find(key);
    if (it == r.properties.end()) continue;
    props[key] = {{"verdict", it->second.value}, {"witness", witness_to_json(it->second.witness)}, {"routes", it->second.routes}};
  }
  for (const auto& [key, v] : r.properties)
    if (!props.contains(key))
      props[key] = {{"verdict", v.value}, {"witness", witness_to_json(v.witness)}, {"routes", v.routes}};
  j["properties"] = props;
  j["notes"] = r.notes;
  return j;
}

ClassificationReport report_from_json(const Json& j) {
  try {
    ClassificationReport r;
    r.graph = graph_from_json(j.at("graph"));
    r.field = FieldSpec::parse(j.at("field").get<std::string>());
    for (const auto& [key, v] : j.at("properties").items()) {
      Verdict verdict;
      verdict.value = v.at("verdict").get<bool>();
      verdict.witness = witness_from_json(v.at("witness"));
      verdict.routes = v.at("routes").get<std::vector<std::string>>();
      r.properties[key] = std::move(verdict);
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

Json homology_to_json(const HomologyProfile& h, FieldSpec field) {
  Json groups = Json::array();
  for (int j = -1; j <= h.max_degree(); ++j) {
    Json torsion = Json::array();
    for (const BigInt& t : h.torsion(j)) torsion.push_back(big_to_json(t));
    groups.push_back({{"degree", j}, {"free_rank", h.free_rank(j)}, {"torsion", torsion}});
  }
  Json out;
  out["field"] = field.to_string();
  out["groups"] = groups;
  if (field.kind() != FieldSpec::Kind::AllFields) {
    const BettiNumbers b = betti(h, field);
    Json betti_json = Json::array();
    for (int j = -1; j <= h.max_degree(); ++j) betti_json.push_back({{"degree", j}, {"betti", b[j]}});
    out["betti"] = betti_json;
  }
  out["acyclic"] = homology_vanishes_below(h, h.max_degree() + 1, field);
  return out;
}

Json example_decision_to_json(const ExampleIdealDecision& d) {
  Json j;
  j["exponents"] = d.exponents;
  j["systems_satisfied"] = d.systems;
  j["gcm_by_systems"] = d.gcm_by_systems;
  j["gcm_by_enumeration"] = d.gcm_by_enumeration;
  j["routes_agree"] = d.gcm_by_systems == d.gcm_by_enumeration;
  j["cm"] = d.cm;
  j["gcm_rederived"] = d.gcm_rederived;
  Json w = Json::object();
  w["system"] = d.witness_system ? Json(*d.witness_system) : Json(nullptr);
  w["gamma"] = d.witness_gamma ? set_list(*d.witness_gamma) : Json(nullptr);
  w["point"] = d.witness_point ? Json(d.witness_point->values()) : Json(nullptr);
  j["witness"] = w;
  j["listed_gammas"] = gamma_list(example_listed_gammas());
  j["rederived_gammas"] = gamma_list(d.rederived_gammas);
  j["listed_not_rederived"] = gamma_list(d.listed_not_rederived);
  j["rederived_not_listed"] = gamma_list(d.rederived_not_listed);
  j["fourier_motzkin"] = {{"checks", d.fm_checks}, {"disagreements", d.fm_disagreements}};
  return j;
}

}  // namespace edgepow
