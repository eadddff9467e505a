#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "complex.hpp"
#include "disc.hpp"
#include "filling.hpp"
#include "hyperbolicity.hpp"
#include "report.hpp"

namespace fivenine {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kComplexVersion = "cliquecomplex-v1";

enum class InputFormat { json, edge_list };

/// JSON when the first non-blank character is '{', edge list otherwise.
inline InputFormat sniff_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? InputFormat::json : InputFormat::edge_list;
  }
  return InputFormat::edge_list;
}

namespace detail {

template <typename T>
T get_field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("field '") + key + "': " + e.what());
  }
}

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::parse, e.what());
  }
}

}  // namespace detail

inline FlagComplex complex_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::parse, "complex JSON must be an object");
  if (j.contains("version") && j["version"] != kComplexVersion) {
    fail(ErrorKind::parse, "unsupported version tag " + j["version"].dump());
  }
  const auto n = detail::get_field<std::size_t>(j, "vertices");
  const auto raw_edges = detail::get_field<std::vector<std::vector<long long>>>(j, "edges");
  auto as_vertex = [&](long long v) {
    if (v < 0) fail(ErrorKind::parse, "negative vertex id " + std::to_string(v));
    return Vertex(v);
  };
  std::vector<Edge> edges;
  for (const auto& e : raw_edges) {
    if (e.size() != 2) fail(ErrorKind::parse, "edges must be pairs");
    edges.push_back({as_vertex(e[0]), as_vertex(e[1])});
  }
  // Duplicates in either orientation are rejected by the constructor.
  for (auto& e : edges) e = make_edge(e[0], e[1]);
  std::optional<std::vector<Triangle>> triangles;
  if (j.contains("triangles") && !j["triangles"].is_null()) {
    triangles.emplace();
    for (const auto& t : detail::get_field<std::vector<std::vector<long long>>>(j, "triangles")) {
      if (t.size() != 3) fail(ErrorKind::parse, "triangles must be triples");
      triangles->push_back({as_vertex(t[0]), as_vertex(t[1]), as_vertex(t[2])});
    }
  }
  FlagComplex X(n, edges, std::move(triangles));
  if (j.contains("simply_connected") && !j["simply_connected"].is_null()) {
    X.set_simply_connected(detail::get_field<bool>(j, "simply_connected"));
  }
  if (j.contains("labels") && !j["labels"].is_null()) {
    X.set_labels(detail::get_field<std::vector<std::string>>(j, "labels"));
  }
  return X;
}

/// One "u v" pair per line; '#' starts a comment. The vertex count is one
/// more than the largest id mentioned.
inline FlagComplex complex_from_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    Edge e{};
    for (int i = 0; i < 2; ++i) {
      std::size_t used = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(tokens[i], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tokens[i].size() || tokens[i][0] == '-') {
        fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": bad vertex '" + tokens[i] + "'");
      }
      e[i] = Vertex(value);
      n = std::max<std::size_t>(n, value + 1);
    }
    if (e[0] == e[1]) {
      fail(ErrorKind::invariant, "line " + std::to_string(line_no) + ": self-loop");
    }
    edges.push_back(make_edge(e[0], e[1]));
  }
  return FlagComplex(n, edges);
}

inline FlagComplex load_complex(std::string_view text, InputFormat format) {
  if (format == InputFormat::edge_list) return complex_from_edge_list(text);
  return complex_from_json(detail::parse_json(text));
}

inline FlagComplex load_complex(std::string_view text) { return load_complex(text, sniff_format(text)); }

inline Json to_json(const FlagComplex& X) {
  Json j;
  j["version"] = kComplexVersion;
  j["vertices"] = X.vertex_count();
  Json edges = Json::array();
  for (auto [u, v] : X.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (X.explicit_triangles()) {
    Json tris = Json::array();
    for (const auto& t : *X.explicit_triangles()) tris.push_back({t[0], t[1], t[2]});
    j["triangles"] = std::move(tris);
  }
  if (X.simply_connected()) j["simply_connected"] = *X.simply_connected();
  if (X.labels()) j["labels"] = *X.labels();
  return j;
}

inline Json to_json(const ConditionReport& r) {
  Json j;
  j["condition"] = to_string(r.condition);
  j["verdict"] = to_string(r.verdict);
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj;
    wj["vertices"] = w.vertices;
    wj["loops"] = w.loops;
    wj["clause"] = w.clause;
    witnesses.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(witnesses);
  if (r.condition == Condition::m_location) j["undetermined"] = r.undetermined;
  Json stats = Json::object();
  Json hist = Json::object();
  // Numeric keys in numeric order, "inf" last.
  std::vector<std::pair<std::string, std::size_t>> entries(r.largeness_histogram.begin(),
                                                            r.largeness_histogram.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    auto key = [](const std::string& s) {
      return s == "inf" ? std::numeric_limits<unsigned long>::max() : std::stoul(s);
    };
    return key(a.first) < key(b.first);
  });
  for (const auto& [k, v] : entries) hist[k] = v;
  stats["largeness_histogram"] = std::move(hist);
  for (const auto& [k, v] : r.counters) stats[k] = v;
  j["stats"] = std::move(stats);
  return j;
}

inline Json to_json(const DiagramMap& M) {
  Json j;
  Json disc;
  disc["boundary"] = M.disc.boundary;
  disc["interior"] = M.disc.interior();
  Json tris = Json::array();
  for (const auto& t : M.disc.triangles) tris.push_back({t[0], t[1], t[2]});
  disc["triangles"] = std::move(tris);
  j["disc"] = std::move(disc);
  Json map = Json::object();
  for (Vertex v = 0; v < M.vertex_map.size(); ++v) map[std::to_string(v)] = M.vertex_map[v];
  j["map"] = std::move(map);
  j["area"] = M.area();
  j["flags"] = {{"simplicial", M.simplicial}, {"nondegenerate", M.nondegenerate}};
  return j;
}

inline DiagramMap diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("disc")) fail(ErrorKind::parse, "diagram JSON needs a 'disc' object");
  const Json& d = j["disc"];
  DiagramMap M;
  M.disc.boundary = detail::get_field<std::vector<Vertex>>(d, "boundary");
  const auto interior = detail::get_field<std::vector<Vertex>>(d, "interior");
  for (const auto& t : detail::get_field<std::vector<std::vector<Vertex>>>(d, "triangles")) {
    if (t.size() != 3) fail(ErrorKind::parse, "triangles must be triples");
    M.disc.triangles.push_back({t[0], t[1], t[2]});
  }
  M.disc.vertex_count = M.disc.boundary.size() + interior.size();
  std::vector<Vertex> all = M.disc.boundary;
  all.insert(all.end(), interior.begin(), interior.end());
  std::sort(all.begin(), all.end());
  for (Vertex i = 0; i < all.size(); ++i) {
    if (all[i] != i) fail(ErrorKind::parse, "disc vertices must be exactly 0..V-1");
  }
  M.vertex_map.assign(M.disc.vertex_count, 0);
  std::vector<unsigned char> seen(M.disc.vertex_count, 0);
  if (!j.contains("map") || !j["map"].is_object()) fail(ErrorKind::parse, "diagram JSON needs a 'map' object");
  for (const auto& [key, value] : j["map"].items()) {
    std::size_t v = 0;
    try {
      v = std::stoul(key);
    } catch (const std::exception&) {
      fail(ErrorKind::parse, "map key '" + key + "' is not a vertex id");
    }
    if (v >= M.disc.vertex_count) fail(ErrorKind::parse, "map key " + key + " is out of range");
    if (!value.is_number_unsigned()) fail(ErrorKind::parse, "map value for " + key + " must be a vertex id");
    M.vertex_map[v] = value.get<Vertex>();
    seen[v] = 1;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    fail(ErrorKind::parse, "map must cover every disc vertex");
  }
  if (j.contains("flags")) {
    M.simplicial = detail::get_field<bool>(j["flags"], "simplicial");
    M.nondegenerate = detail::get_field<bool>(j["flags"], "nondegenerate");
  }
  return M;
}

/// A bare disc as diagram JSON: the identity map onto its own complex.
inline DiagramMap identity_diagram(const TriangulatedDisc& D) {
  DiagramMap M;
  M.disc = D;
  M.vertex_map.resize(D.vertex_count);
  for (Vertex v = 0; v < D.vertex_count; ++v) M.vertex_map[v] = v;
  return M;
}

inline Json to_json(const FillingResult& r) {
  Json j;
  if (r.diagram) {
    j = to_json(*r.diagram);
  }
  j["status"] = r.status == FillingStatus::found ? "found" : "BudgetExceeded";
  j["search"] = {{"max_area_searched", r.max_area_searched},
                 {"minimal_solutions", r.minimal_solutions},
                 {"nodes", r.nodes},
                 {"node_cap_hit", r.node_cap_hit},
                 {"space", "simplicial flag discs, nondegenerate maps"}};
  return j;
}

inline std::string_view to_string(DeltaMethod::Kind k) {
  return k == DeltaMethod::Kind::exact ? "exact" : "sampled";
}

inline Json to_json(const DeltaResult& r) {
  Json j;
  j["delta"] = r.delta.to_string();
  j["witness"] = r.witness;
  if (r.method.kind == DeltaMethod::Kind::exact) {
    j["method"] = "exact";
  } else {
    j["method"] = {{"sampled", r.method.samples}, {"seed", r.method.seed}};
  }
  return j;
}

inline std::string profile_csv(const std::vector<DeltaProfileRow>& rows) {
  std::string out = "radius,vertices,delta\n";
  for (const auto& row : rows) {
    out += std::to_string(row.radius) + "," + std::to_string(row.vertex_count) + "," +
           row.delta.delta.to_string() + "\n";
  }
  return out;
}

/// DOT rendering of a disc; boundary vertices are boxes, interior circles.
/// Labels show the target vertex each disc vertex maps to.
inline std::string to_dot(const DiagramMap& M) {
  std::ostringstream out;
  out << "graph disc {\n  node [fontsize=10];\n";
  std::vector<unsigned char> on_boundary(M.disc.vertex_count, 0);
  for (Vertex b : M.disc.boundary) on_boundary[b] = 1;
  for (Vertex v = 0; v < M.disc.vertex_count; ++v) {
    out << "  " << v << " [label=\"" << v << "->" << M.vertex_map[v] << "\", shape="
        << (on_boundary[v] ? "box, style=bold" : "circle") << "];\n";
  }
  for (auto [a, b] : M.disc.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

/// Plain-text rendering of a JSON report: one "path: value" line per leaf.
inline void render_human(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    if (j.empty()) out += prefix + ": {}\n";
    for (const auto& [k, v] : j.items()) render_human(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_array()) {
        out += prefix + "[" + std::to_string(i) + "]: " + j[i].dump() + "\n";
      } else {
        render_human(j[i], prefix + "[" + std::to_string(i) + "]", out);
      }
    }
  } else {
    out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

inline std::string render_human(const Json& j) {
  std::string out;
  render_human(j, "", out);
  return out;
}

}  // namespace fivenine
