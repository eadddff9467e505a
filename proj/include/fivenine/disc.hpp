#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "complex.hpp"
#include "curvature.hpp"

namespace fivenine {

// Combinatorial 2-disc. Vertices are 0..vertex_count-1; the boundary is a
// cyclic sequence, every other vertex is interior.
struct TriangulatedDisc {
  std::size_t vertex_count = 0;
  std::vector<Vertex> boundary;
  std::vector<Triangle> triangles;

  std::size_t area() const { return triangles.size(); }

  std::vector<Vertex> interior() const {
    std::vector<unsigned char> on_boundary(vertex_count, 0);
    for (Vertex b : boundary) {
      if (b < vertex_count) on_boundary[b] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count; ++v) {
      if (!on_boundary[v]) out.push_back(v);
    }
    return out;
  }

  std::vector<Edge> edges() const {
    std::set<Edge> s;
    for (const auto& t : triangles) {
      s.insert(make_edge(t[0], t[1]));
      s.insert(make_edge(t[1], t[2]));
      s.insert(make_edge(t[0], t[2]));
    }
    return {s.begin(), s.end()};
  }

  friend bool operator==(const TriangulatedDisc&, const TriangulatedDisc&) = default;
};

// Vertex map from a disc into a target complex, with the declared
// simpliciality flags. The target is passed alongside when validating.
struct DiagramMap {
  TriangulatedDisc disc;
  std::vector<Vertex> vertex_map;
  bool simplicial = true;
  bool nondegenerate = true;

  std::size_t area() const { return disc.area(); }

  Loop boundary_image() const {
    Loop out;
    for (Vertex b : disc.boundary) out.vertices.push_back(vertex_map.at(b));
    return out;
  }

  friend bool operator==(const DiagramMap&, const DiagramMap&) = default;
};

namespace detail {

// Orders the link of v (edges {a,b} opposite v in its triangles) into a
// single path or cycle. Returns nullopt when the link is anything else.
struct LinkShape {
  bool is_cycle = false;
  std::vector<Vertex> order;
};

inline std::optional<LinkShape> link_shape(const std::vector<Edge>& link_edges) {
  std::map<Vertex, std::vector<Vertex>> nb;
  for (auto [a, b] : link_edges) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  if (nb.empty()) return std::nullopt;
  std::vector<Vertex> ends;
  for (auto& [v, ws] : nb) {
    if (ws.size() > 2) return std::nullopt;
    if (ws.size() == 1) ends.push_back(v);
  }
  if (!ends.empty() && ends.size() != 2) return std::nullopt;
  LinkShape shape;
  shape.is_cycle = ends.empty();
  Vertex start = shape.is_cycle ? nb.begin()->first : ends[0];
  Vertex cur = start;
  std::optional<Vertex> prev;
  shape.order.push_back(start);
  while (true) {
    std::optional<Vertex> next;
    for (Vertex w : nb[cur]) {
      if (!prev || w != *prev) {
        next = w;
        break;
      }
    }
    if (!next || *next == start) break;
    shape.order.push_back(*next);
    prev = cur;
    cur = *next;
  }
  if (shape.order.size() != nb.size()) return std::nullopt;  // disconnected link
  return shape;
}

}  // namespace detail

/// Structural audit of a candidate disc. Clauses: "range", "boundary",
/// "duplicate", "edge-incidence", "euler", "vertex-link", "connected".
inline ConditionReport validate_disc(const TriangulatedDisc& D) {
  auto report = make_report(Condition::disc);
  const std::size_t n = D.vertex_count;
  auto bad = [&](std::vector<Vertex> vs, std::string clause) {
    report.add(Witness{std::move(vs), {}, std::move(clause)});
    return report;
  };

  if (D.boundary.size() < 3) return bad({}, "boundary");
  for (Vertex b : D.boundary) {
    if (b >= n) return bad({b}, "range");
  }
  {
    auto sorted = D.boundary;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) return bad({*dup}, "boundary");
  }
  std::set<Triangle> seen;
  for (const auto& t : D.triangles) {
    for (Vertex v : t) {
      if (v >= n) return bad({v}, "range");
    }
    auto s = make_triangle(t[0], t[1], t[2]);
    if (s[0] == s[1] || s[1] == s[2]) return bad({s[0], s[1], s[2]}, "duplicate");
    if (!seen.insert(s).second) return bad({s[0], s[1], s[2]}, "duplicate");
  }

  std::map<Edge, std::size_t> incidence;
  for (const auto& t : seen) {
    ++incidence[make_edge(t[0], t[1])];
    ++incidence[make_edge(t[1], t[2])];
    ++incidence[make_edge(t[0], t[2])];
  }
  std::set<Edge> boundary_edges;
  for (std::size_t i = 0; i < D.boundary.size(); ++i) {
    boundary_edges.insert(make_edge(D.boundary[i], D.boundary[(i + 1) % D.boundary.size()]));
  }
  for (const auto& [e, count] : incidence) {
    const std::size_t expected = boundary_edges.count(e) ? 1 : 2;
    if (count != expected) return bad({e[0], e[1]}, "edge-incidence");
  }
  for (const auto& e : boundary_edges) {
    if (!incidence.count(e)) return bad({e[0], e[1]}, "boundary");
  }

  const long long euler =
      (long long)n - (long long)incidence.size() + (long long)D.triangles.size();
  if (euler != 1) return bad({}, "euler");

  std::vector<std::vector<Edge>> link_edges(n);
  for (const auto& t : seen) {
    link_edges[t[0]].push_back(make_edge(t[1], t[2]));
    link_edges[t[1]].push_back(make_edge(t[0], t[2]));
    link_edges[t[2]].push_back(make_edge(t[0], t[1]));
  }
  std::vector<unsigned char> on_boundary(n, 0);
  for (Vertex b : D.boundary) on_boundary[b] = 1;
  for (Vertex v = 0; v < n; ++v) {
    auto shape = detail::link_shape(link_edges[v]);
    if (!shape || shape->is_cycle == bool(on_boundary[v])) return bad({v}, "vertex-link");
  }

  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [e, count] : incidence) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<unsigned char> reached(n, 0);
  std::vector<Vertex> stack{D.boundary[0]};
  reached[D.boundary[0]] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj[u]) {
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) return bad({}, "connected");

  report.counters["interior_vertices"] = n - D.boundary.size();
  report.counters["triangles"] = D.triangles.size();
  return report;
}

/// The disc as a complex: its 1-skeleton plus its triangles listed
/// explicitly, so flagness_check doubles as the 3-clique/face audit.
/// Discs are contractible, so simply_connected is set.
inline FlagComplex disc_complex(const TriangulatedDisc& D) {
  auto edges = D.edges();
  std::vector<Triangle> tris;
  for (const auto& t : D.triangles) tris.push_back(make_triangle(t[0], t[1], t[2]));
  FlagComplex X(D.vertex_count, edges, std::move(tris));
  X.set_simply_connected(true);
  return X;
}

/// Same 1-skeleton, read as a clique complex.
inline FlagComplex disc_clique_complex(const TriangulatedDisc& D) {
  auto edges = D.edges();
  FlagComplex X(D.vertex_count, edges);
  X.set_simply_connected(true);
  return X;
}

inline bool disc_is_flag(const TriangulatedDisc& D) { return flagness_check(disc_complex(D)).passed(); }

/// Recomputes simpliciality and nondegeneracy from scratch and compares with
/// the declared flags. When `loop` is given the boundary must map onto it
/// position by position. Clauses: "simplicial", "nondegenerate", "boundary".
inline ConditionReport validate_map(const FlagComplex& target, const DiagramMap& M,
                                    const std::optional<Loop>& loop = std::nullopt) {
  const auto& D = M.disc;
  if (M.vertex_map.size() != D.vertex_count) {
    fail(ErrorKind::target_mismatch, "vertex map has " + std::to_string(M.vertex_map.size()) +
                                         " entries for a disc of " +
                                         std::to_string(D.vertex_count) + " vertices");
  }
  for (Vertex image : M.vertex_map) {
    if (!target.contains(image)) {
      fail(ErrorKind::target_mismatch, "image vertex " + std::to_string(image) + " is not in the target");
    }
  }
  auto report = make_report(Condition::diagram_map);
  const auto& f = M.vertex_map;
  auto close = [&](Vertex a, Vertex b) { return a == b || target.adjacent(a, b); };

  bool simplicial = true;
  bool nondegenerate = true;
  std::optional<Witness> simplicial_witness, degenerate_witness;
  for (const auto& t : D.triangles) {
    Vertex a = f[t[0]], b = f[t[1]], c = f[t[2]];
    if (!close(a, b) || !close(b, c) || !close(a, c) ||
        (a != b && b != c && a != c && !target.has_triangle(a, b, c))) {
      simplicial = false;
      if (!simplicial_witness) simplicial_witness = Witness{{t[0], t[1], t[2]}, {}, "simplicial"};
    }
    if (a == b || b == c || a == c) {
      nondegenerate = false;
      if (!degenerate_witness) degenerate_witness = Witness{{t[0], t[1], t[2]}, {}, "nondegenerate"};
    }
  }
  if (!simplicial) nondegenerate = false;

  report.counters["simplicial"] = simplicial;
  report.counters["nondegenerate"] = nondegenerate;
  if (simplicial != M.simplicial) {
    report.add(simplicial_witness.value_or(Witness{{}, {}, "simplicial"}));
  }
  if (nondegenerate != M.nondegenerate) {
    report.add(degenerate_witness.value_or(Witness{{}, {}, "nondegenerate"}));
  }

  // The boundary must land on a loop of the target, bijectively and edge to edge.
  auto image = M.boundary_image();
  bool boundary_ok = true;
  try {
    make_loop(target, image.vertices);
  } catch (const Error&) {
    boundary_ok = false;
  }
  if (boundary_ok && loop && image != *loop) boundary_ok = false;
  if (!boundary_ok) report.add(Witness{D.boundary, {image.vertices}, "boundary"});
  report.canonicalize();
  return report;
}

}  // namespace fivenine
