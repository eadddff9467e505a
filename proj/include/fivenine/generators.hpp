#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "complex.hpp"
#include "disc.hpp"

namespace fivenine {

inline FlagComplex cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back(make_edge(i, Vertex((i + 1) % n)));
  return FlagComplex(n, edges);
}

inline FlagComplex path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return FlagComplex(n, edges);
}

/// The full simplex on n vertices (the complete graph, read as a clique complex).
inline FlagComplex simplex(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  FlagComplex X(n, edges);
  X.set_simply_connected(true);
  return X;
}

/// Adds an apex joined to every base vertex. The apex is the last vertex.
inline FlagComplex gen_cone(const FlagComplex& base) {
  const std::size_t n = base.vertex_count();
  auto edges = base.edges();
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, Vertex(n)});
  std::optional<std::vector<Triangle>> triangles;
  if (!base.clique_mode()) {
    triangles = *base.explicit_triangles();
    for (auto [u, v] : base.edges()) triangles->push_back(make_triangle(u, v, Vertex(n)));
  }
  FlagComplex X(n + 1, edges, std::move(triangles));
  X.set_simply_connected(true);
  return X;
}

enum class Platonic { octahedron, icosahedron };

inline FlagComplex gen_platonic(Platonic which) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  if (which == Platonic::octahedron) {
    // Antipodal pairs are (0,5), (1,3), (2,4); poles 0 and 5, equator 1,2,3,4.
    n = 6;
    const Edge list[] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3},
                         {3, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}};
    edges.assign(std::begin(list), std::end(list));
  } else {
    // Pole 0, upper ring 1..5, lower ring 6..10, pole 11.
    n = 12;
    for (Vertex i = 0; i < 5; ++i) {
      Vertex up = 1 + i, up_next = 1 + (i + 1) % 5;
      Vertex low = 6 + i, low_next = 6 + (i + 1) % 5;
      edges.push_back({0, up});
      edges.push_back(make_edge(up, up_next));
      edges.push_back({up, low});
      edges.push_back(make_edge(up_next, low));
      edges.push_back(make_edge(low, low_next));
      edges.push_back({low, 11});
    }
  }
  FlagComplex X(n, edges);
  X.set_simply_connected(true);
  return X;
}

/// Combinatorial ball of radius r in the triangulation of the plane (or the
/// sphere, for d = 5) with every interior vertex of degree d, grown layer by
/// layer. Vertex 0 is the center; layers are numbered outward.
inline FlagComplex gen_tiling_patch(unsigned d, unsigned r) {
  if (d < 5) fail(ErrorKind::precondition_violated, "tiling degree must be at least 5");
  if (r < 1) fail(ErrorKind::precondition_violated, "tiling radius must be at least 1");
  if (d == 5 && r >= 3) return gen_platonic(Platonic::icosahedron);

  std::vector<Edge> edges;
  std::vector<std::size_t> parents;  // parent count per vertex
  std::vector<Vertex> layer;
  Vertex next = 1;
  for (unsigned i = 0; i < d; ++i) {
    layer.push_back(next++);
    edges.push_back({0, layer.back()});
  }
  parents.assign(1 + d, 1);
  for (std::size_t i = 0; i < layer.size(); ++i) {
    edges.push_back(make_edge(layer[i], layer[(i + 1) % layer.size()]));
  }

  for (unsigned radius = 1; radius < r; ++radius) {
    // Outward fan of v has d - 2 - parents(v) vertices; consecutive fans
    // share their touching ends.
    const std::size_t L = layer.size();
    std::vector<Vertex> outer;
    std::vector<std::vector<Vertex>> fan(L);
    for (std::size_t i = 0; i < L; ++i) {
      const Vertex v = layer[i];
      const long out_degree = long(d) - 2 - long(parents[v]);
      if (out_degree < 2) {
        fail(ErrorKind::unrealizable, "tiling layer cannot be extended for degree " + std::to_string(d));
      }
      if (i == 0) {
        fan[i].push_back(next++);
        parents.push_back(0);
      } else {
        fan[i].push_back(fan[i - 1].back());
      }
      for (long k = 1; k < out_degree; ++k) {
        if (i + 1 == L && k + 1 == out_degree) {
          fan[i].push_back(fan[0].front());
        } else {
          fan[i].push_back(next++);
          parents.push_back(0);
        }
      }
    }
    for (std::size_t i = 0; i < L; ++i) {
      for (Vertex w : fan[i]) {
        edges.push_back(make_edge(layer[i], w));
        ++parents[w];
      }
      for (std::size_t k = 0; k + 1 < fan[i].size(); ++k) {
        if (std::find(outer.begin(), outer.end(), fan[i][k]) == outer.end()) outer.push_back(fan[i][k]);
      }
    }
    for (std::size_t i = 0; i < outer.size(); ++i) {
      edges.push_back(make_edge(outer[i], outer[(i + 1) % outer.size()]));
    }
    layer = std::move(outer);
  }
  FlagComplex X(next, edges);
  X.set_simply_connected(true);
  return X;
}

/// Disc whose interior vertices form a path c_0 - ... - c_{t-1} with the
/// given degrees. Requires every degree >= 4 and
/// boundary_len == sum(degrees) - 4 (t - 1). Middle vertices split their
/// boundary arc as evenly as possible, the larger half on the first side.
/// Boundary vertices are 0..n-1 in order, interior n..n+t-1 in path order.
inline TriangulatedDisc gen_polygon_disc(std::size_t boundary_len,
                                         const std::vector<unsigned>& interior_degrees) {
  const std::size_t t = interior_degrees.size();
  auto unrealizable = [&](const std::string& why) {
    fail(ErrorKind::unrealizable, "boundary " + std::to_string(boundary_len) + ": " + why);
  };
  if (boundary_len < 3) unrealizable("boundary must have at least 3 vertices");
  TriangulatedDisc D;
  D.vertex_count = boundary_len + t;
  for (Vertex i = 0; i < boundary_len; ++i) D.boundary.push_back(i);
  if (t == 0) {
    if (boundary_len != 3) unrealizable("no interior vertices realize only the single triangle");
    D.triangles.push_back({0, 1, 2});
    return D;
  }
  long expected = 0;
  for (unsigned deg : interior_degrees) {
    if (deg < 4) unrealizable("interior degrees must be at least 4");
    expected += deg;
  }
  expected -= 4 * long(t - 1);
  if (expected != long(boundary_len)) {
    unrealizable("degree sequence needs boundary length " + std::to_string(expected));
  }
  const Vertex first_interior = Vertex(boundary_len);
  if (t == 1) {
    for (Vertex i = 0; i < boundary_len; ++i) {
      D.triangles.push_back({i, Vertex((i + 1) % boundary_len), first_interior});
    }
    return D;
  }

  // Top arcs run forward along the boundary from the end arc of c_0, bottom
  // arcs run backward. Boundary layout (forward): end arc of c_0 from B0 to
  // T0, top arcs, end arc of c_{t-1}, bottom arcs back to B0.
  std::vector<std::size_t> top(t, 0), bottom(t, 0);
  for (std::size_t j = 1; j + 1 < t; ++j) {
    const std::size_t side = interior_degrees[j] - 2;
    top[j] = (side + 1) / 2;
    bottom[j] = side / 2;
  }
  // Boundary positions of the apexes T_j (top) and B_j (bottom) of edge c_j c_{j+1}.
  std::vector<Vertex> T(t - 1), B(t - 1);
  std::size_t pos = interior_degrees[0] - 2;  // end arc of c_0 has d_0 - 1 vertices
  T[0] = Vertex(pos);
  for (std::size_t j = 1; j + 1 < t; ++j) {
    pos += top[j] - 1;
    T[j] = Vertex(pos);
  }
  pos += interior_degrees[t - 1] - 2;  // end arc of c_{t-1}
  B[t - 2] = Vertex(pos % boundary_len);
  for (std::size_t j = t - 2; j >= 1; --j) {
    pos += bottom[j] - 1;
    B[j - 1] = Vertex(pos % boundary_len);
  }
  if (pos != boundary_len) unrealizable("arc bookkeeping does not close");

  auto c = [&](std::size_t j) { return Vertex(first_interior + j); };
  auto fan = [&](Vertex hub, Vertex from, Vertex to) {
    // Triangles between hub and the forward boundary arc from..to.
    for (Vertex p = from; p != to; p = Vertex((p + 1) % boundary_len)) {
      D.triangles.push_back({p, Vertex((p + 1) % boundary_len), hub});
    }
  };
  fan(c(0), B[0], T[0]);
  for (std::size_t j = 1; j + 1 < t; ++j) fan(c(j), T[j - 1], T[j]);
  fan(c(t - 1), T[t - 2], B[t - 2]);
  for (std::size_t j = t - 2; j >= 1; --j) fan(c(j), B[j], B[j - 1]);
  for (std::size_t j = 0; j + 1 < t; ++j) {
    D.triangles.push_back({c(j), T[j], c(j + 1)});
    D.triangles.push_back({c(j), c(j + 1), B[j]});
  }
  for (auto& tri : D.triangles) tri = make_triangle(tri[0], tri[1], tri[2]);
  std::sort(D.triangles.begin(), D.triangles.end());
  if (!validate_disc(D).passed() || !disc_is_flag(D)) unrealizable("construction is not a flag disc");
  return D;
}

/// Seeded edge-probability model; the clique complex of the sampled graph.
/// Uses the top 53 bits of mt19937_64 so the stream is portable.
inline FlagComplex gen_random_flag(std::size_t n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) fail(ErrorKind::precondition_violated, "edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const double u = double(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back({i, j});
    }
  }
  return FlagComplex(n, edges);
}

}  // namespace fivenine
