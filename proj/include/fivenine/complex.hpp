#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "report.hpp"

namespace fivenine {

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// A finite flag simplicial complex stored through its 1-skeleton. Higher
// simplices are the cliques of the graph; an optional explicit triangle list
// is kept only so untrusted input can be audited for flagness.
class FlagComplex {
 public:
  FlagComplex() = default;

  /// Throws InvariantError on self-loops, duplicate or out-of-range edges,
  /// and on explicit triangles whose edges are missing.
  FlagComplex(std::size_t vertex_count, std::span<const Edge> edges,
              std::optional<std::vector<Triangle>> triangles = std::nullopt)
      : n_(vertex_count), adj_(vertex_count), matrix_(vertex_count * vertex_count, 0) {
    for (auto [u, v] : edges) {
      if (u >= n_ || v >= n_) {
        fail(ErrorKind::invariant, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                       ") references a vertex outside 0.." + std::to_string(n_));
      }
      if (u == v) fail(ErrorKind::invariant, "self-loop at vertex " + std::to_string(u));
      if (matrix_[u * n_ + v]) {
        fail(ErrorKind::invariant,
             "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
      matrix_[u * n_ + v] = matrix_[v * n_ + u] = 1;
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
    edge_count_ = edges.size();
    if (triangles) {
      for (auto& t : *triangles) {
        t = make_triangle(t[0], t[1], t[2]);
        if (t[0] == t[1] || t[1] == t[2] || t[2] >= n_ || !adjacent(t[0], t[1]) ||
            !adjacent(t[1], t[2]) || !adjacent(t[0], t[2])) {
          fail(ErrorKind::invariant, "triangle {" + std::to_string(t[0]) + "," +
                                         std::to_string(t[1]) + "," + std::to_string(t[2]) +
                                         "} is not supported by edges");
        }
      }
      std::sort(triangles->begin(), triangles->end());
      triangles->erase(std::unique(triangles->begin(), triangles->end()), triangles->end());
      triangles_ = std::move(triangles);
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool contains(Vertex v) const { return v < n_; }

  bool adjacent(Vertex u, Vertex v) const { return matrix_[std::size_t(u) * n_ + v] != 0; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool clique_mode() const { return !triangles_.has_value(); }
  const std::optional<std::vector<Triangle>>& explicit_triangles() const { return triangles_; }

  /// True when {a,b,c} is a 2-simplex: a listed triangle in explicit mode,
  /// any 3-clique otherwise.
  bool has_triangle(Vertex a, Vertex b, Vertex c) const {
    if (!adjacent(a, b) || !adjacent(b, c) || !adjacent(a, c)) return false;
    if (clique_mode()) return true;
    return std::binary_search(triangles_->begin(), triangles_->end(), make_triangle(a, b, c));
  }

  const std::optional<bool>& simply_connected() const { return simply_connected_; }
  void set_simply_connected(std::optional<bool> value) { simply_connected_ = value; }

  const std::optional<std::vector<std::string>>& labels() const { return labels_; }
  void set_labels(std::optional<std::vector<std::string>> labels) {
    if (labels && labels->size() != n_) {
      fail(ErrorKind::invariant, "label count does not match vertex count");
    }
    labels_ = std::move(labels);
  }

  void require_vertex(Vertex v) const {
    if (v >= n_) {
      fail(ErrorKind::unknown_vertex,
           "vertex " + std::to_string(v) + " not in complex of size " + std::to_string(n_));
    }
  }

  friend bool operator==(const FlagComplex& a, const FlagComplex& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_ && a.triangles_ == b.triangles_ &&
           a.simply_connected_ == b.simply_connected_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<unsigned char> matrix_;
  std::optional<std::vector<Triangle>> triangles_;
  std::optional<bool> simply_connected_;
  std::optional<std::vector<std::string>> labels_;
};

/// Cyclic sequence of distinct vertices; length counts edges.
struct Loop {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  Vertex operator[](std::size_t i) const { return vertices[i % vertices.size()]; }

  friend bool operator==(const Loop&, const Loop&) = default;
  friend auto operator<=>(const Loop&, const Loop&) = default;
};

/// Lexicographically least representative over all rotations and both
/// orientations.
inline Loop canonical_loop(const Loop& loop) {
  const auto& v = loop.vertices;
  const std::size_t n = v.size();
  if (n == 0) return loop;
  std::vector<Vertex> best;
  std::vector<Vertex> cand(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) cand[i] = v[(s + i) % n];
    if (best.empty() || cand < best) best = cand;
    for (std::size_t i = 0; i < n; ++i) cand[i] = v[(s + n - i) % n];
    if (cand < best) best = cand;
  }
  return Loop{best};
}

/// Validates that `vertices` is a closed edge path of distinct vertices in X.
inline Loop make_loop(const FlagComplex& X, std::vector<Vertex> vertices) {
  if (vertices.size() < 3) fail(ErrorKind::not_a_loop, "a loop needs at least 3 vertices");
  for (Vertex v : vertices) {
    if (!X.contains(v)) {
      fail(ErrorKind::not_a_loop, "vertex " + std::to_string(v) + " is not in the complex");
    }
  }
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorKind::not_a_loop, "loop vertices must be distinct");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex a = vertices[i], b = vertices[(i + 1) % vertices.size()];
    if (!X.adjacent(a, b)) {
      fail(ErrorKind::not_a_loop,
           "consecutive vertices " + std::to_string(a) + "," + std::to_string(b) +
               " are not adjacent");
    }
  }
  return Loop{std::move(vertices)};
}

// Full subcomplex spanned by `members`; vertex i of `complex` is members[i].
struct InducedSubcomplex {
  std::vector<Vertex> members;
  FlagComplex complex;

  std::vector<Vertex> to_global(std::span<const Vertex> local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(members[v]);
    return out;
  }
};

struct LinkView {
  std::vector<Vertex> center;
  InducedSubcomplex view;
};

/// Span of a vertex set: the induced subgraph (and induced explicit
/// triangles, when present). Duplicates in `vertices` are ignored.
inline InducedSubcomplex span(const FlagComplex& X, std::span<const Vertex> vertices) {
  std::vector<Vertex> members(vertices.begin(), vertices.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Vertex v : members) X.require_vertex(v);

  std::vector<Vertex> local(X.vertex_count(), std::numeric_limits<Vertex>::max());
  for (Vertex i = 0; i < members.size(); ++i) local[members[i]] = i;

  std::vector<Edge> edges;
  for (Vertex i = 0; i < members.size(); ++i) {
    for (Vertex w : X.neighbors(members[i])) {
      Vertex j = local[w];
      if (j != std::numeric_limits<Vertex>::max() && i < j) edges.push_back({i, j});
    }
  }
  std::optional<std::vector<Triangle>> triangles;
  if (!X.clique_mode()) {
    triangles.emplace();
    for (const auto& t : *X.explicit_triangles()) {
      Vertex a = local[t[0]], b = local[t[1]], c = local[t[2]];
      constexpr Vertex none = std::numeric_limits<Vertex>::max();
      if (a != none && b != none && c != none) triangles->push_back(make_triangle(a, b, c));
    }
  }
  const std::size_t count = members.size();
  return InducedSubcomplex{std::move(members), FlagComplex(count, edges, std::move(triangles))};
}

/// True iff the edge set `edges` (global ids, over the vertex set
/// `vertices`) is exactly the adjacency X induces on those vertices.
inline bool is_full_subcomplex(const FlagComplex& X, std::span<const Vertex> vertices,
                               std::span<const Edge> edges) {
  for (Vertex v : vertices) X.require_vertex(v);
  std::vector<Edge> given;
  for (auto [a, b] : edges) {
    X.require_vertex(a);
    X.require_vertex(b);
    given.push_back(make_edge(a, b));
  }
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  std::vector<Edge> induced;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] != vertices[j] && X.adjacent(vertices[i], vertices[j])) {
        induced.push_back(make_edge(vertices[i], vertices[j]));
      }
    }
  }
  std::sort(induced.begin(), induced.end());
  induced.erase(std::unique(induced.begin(), induced.end()), induced.end());
  return given == induced;
}

/// A loop viewed as a subcomplex: its vertices and its cycle edges.
inline bool is_full_loop(const FlagComplex& X, const Loop& loop) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < loop.length(); ++i) edges.push_back(make_edge(loop[i], loop[i + 1]));
  return is_full_subcomplex(X, loop.vertices, edges);
}

/// Link of a vertex ({v}) or edge ({u,v}).
inline LinkView compute_link(const FlagComplex& X, std::span<const Vertex> sigma) {
  if (sigma.empty() || sigma.size() > 2) {
    fail(ErrorKind::not_a_simplex, "link center must be a vertex or an edge");
  }
  for (Vertex v : sigma) {
    if (!X.contains(v)) {
      fail(ErrorKind::not_a_simplex, "vertex " + std::to_string(v) + " is not in the complex");
    }
  }
  std::vector<Vertex> members;
  if (sigma.size() == 1) {
    auto nb = X.neighbors(sigma[0]);
    members.assign(nb.begin(), nb.end());
  } else {
    if (!X.adjacent(sigma[0], sigma[1])) {
      fail(ErrorKind::not_a_simplex, "edge endpoints " + std::to_string(sigma[0]) + "," +
                                         std::to_string(sigma[1]) + " are not adjacent");
    }
    auto a = X.neighbors(sigma[0]);
    auto b = X.neighbors(sigma[1]);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(members));
    if (!X.clique_mode()) {
      std::erase_if(members, [&](Vertex w) { return !X.has_triangle(sigma[0], sigma[1], w); });
    }
  }
  LinkView link{std::vector<Vertex>(sigma.begin(), sigma.end()), span(X, members)};
  // In explicit mode a link edge {a,b} of vertex v needs the triangle {v,a,b};
  // the link itself is read as a clique complex.
  if (!X.clique_mode() && sigma.size() == 1) {
    std::vector<Edge> kept;
    const auto& view = link.view;
    for (auto [a, b] : view.complex.edges()) {
      if (X.has_triangle(sigma[0], view.members[a], view.members[b])) kept.push_back({a, b});
    }
    link.view.complex = FlagComplex(view.members.size(), kept);
  }
  return link;
}

inline LinkView compute_link(const FlagComplex& X, Vertex v) {
  const Vertex sigma[] = {v};
  return compute_link(X, sigma);
}

constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

/// Breadth-first distances from `source`; `unreachable` marks other components.
inline std::vector<std::size_t> distances_from(const FlagComplex& X, Vertex source) {
  X.require_vertex(source);
  std::vector<std::size_t> dist(X.vertex_count(), unreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : X.neighbors(u)) {
      if (dist[w] == unreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline std::size_t distance(const FlagComplex& X, Vertex u, Vertex v) {
  X.require_vertex(v);
  return distances_from(X, u)[v];
}

/// Row-major all-pairs distance table.
inline std::vector<std::size_t> all_pairs_distances(const FlagComplex& X) {
  const std::size_t n = X.vertex_count();
  std::vector<std::size_t> table(n * n);
  for (Vertex u = 0; u < n; ++u) {
    auto row = distances_from(X, u);
    std::copy(row.begin(), row.end(), table.begin() + std::ptrdiff_t(u * n));
  }
  return table;
}

inline bool is_connected(const FlagComplex& X) {
  if (X.vertex_count() == 0) return true;
  auto d = distances_from(X, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == unreachable; });
}

inline InducedSubcomplex ball(const FlagComplex& X, Vertex center, std::size_t radius) {
  auto d = distances_from(X, center);
  std::vector<Vertex> members;
  for (Vertex w = 0; w < X.vertex_count(); ++w) {
    if (d[w] <= radius) members.push_back(w);
  }
  return span(X, members);
}

inline InducedSubcomplex sphere(const FlagComplex& X, Vertex center, std::size_t radius) {
  auto d = distances_from(X, center);
  std::vector<Vertex> members;
  for (Vertex w = 0; w < X.vertex_count(); ++w) {
    if (d[w] == radius) members.push_back(w);
  }
  return span(X, members);
}

/// Passes trivially in clique mode. Otherwise every 3-clique must be a listed
/// triangle; the least empty one is reported.
inline ConditionReport flagness_check(const FlagComplex& X) {
  auto report = make_report(Condition::flag);
  if (X.clique_mode()) return report;
  for (Vertex a = 0; a < X.vertex_count(); ++a) {
    for (Vertex b : X.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : X.neighbors(b)) {
        if (c <= b || !X.adjacent(a, c)) continue;
        if (!X.has_triangle(a, b, c)) {
          report.add(Witness{{a, b, c}, {{a, b, c}}, "empty-triangle"});
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace fivenine
