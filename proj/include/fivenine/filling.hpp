#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "complex.hpp"
#include "curvature.hpp"
#include "disc.hpp"

namespace fivenine {

/// Disc with no interior vertices filling `gamma`, built by recursive
/// diagonal splitting. Requires X to be k-large and 3 <= |gamma| < k.
inline DiagramMap fill_without_interior(const FlagComplex& X, const Loop& gamma, unsigned k,
                                        std::optional<Largeness> known_largeness = std::nullopt) {
  auto loop = make_loop(X, gamma.vertices);
  const std::size_t n = loop.length();
  if (n >= k) {
    fail(ErrorKind::precondition_violated,
         "loop length " + std::to_string(n) + " is not below k = " + std::to_string(k));
  }
  Largeness largeness = known_largeness ? *known_largeness : largeness_of_complex(X);
  if (!largeness.is_k_large(k)) {
    fail(ErrorKind::precondition_violated,
         "complex is only " + largeness.to_string() + "-large, not " + std::to_string(k) + "-large");
  }

  DiagramMap M;
  M.disc.vertex_count = n;
  for (Vertex i = 0; i < n; ++i) M.disc.boundary.push_back(i);
  M.vertex_map = loop.vertices;

  // Work on disc positions; a sub-polygon is a list of positions in order.
  std::vector<std::vector<Vertex>> pending{M.disc.boundary};
  while (!pending.empty()) {
    auto poly = std::move(pending.back());
    pending.pop_back();
    if (poly.size() == 3) {
      M.disc.triangles.push_back({poly[0], poly[1], poly[2]});
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> diagonal;
    for (std::size_t i = 0; i < poly.size() && !diagonal; ++i) {
      for (std::size_t j = i + 2; j < poly.size(); ++j) {
        if (i == 0 && j == poly.size() - 1) continue;
        if (X.adjacent(M.vertex_map[poly[i]], M.vertex_map[poly[j]])) {
          diagonal = {i, j};
          break;
        }
      }
    }
    if (!diagonal) {
      fail(ErrorKind::no_diagonal, "a sub-loop of length " + std::to_string(poly.size()) +
                                       " is full although the complex was declared " +
                                       std::to_string(k) + "-large");
    }
    auto [i, j] = *diagonal;
    pending.emplace_back(poly.begin() + std::ptrdiff_t(i), poly.begin() + std::ptrdiff_t(j) + 1);
    std::vector<Vertex> other(poly.begin() + std::ptrdiff_t(j), poly.end());
    other.insert(other.end(), poly.begin(), poly.begin() + std::ptrdiff_t(i) + 1);
    pending.push_back(std::move(other));
  }
  std::sort(M.disc.triangles.begin(), M.disc.triangles.end());
  return M;
}

enum class FillingStatus { found, budget_exceeded };

struct FillingOptions {
  std::size_t max_area = 0;  // 0 means 2 * |gamma|
  // Search-node cap per area level; 0 means unlimited. Hitting it reports
  // budget_exceeded rather than claiming the loop cannot be filled.
  std::uint64_t max_nodes = 0;
};

struct FillingResult {
  FillingStatus status = FillingStatus::budget_exceeded;
  std::optional<DiagramMap> diagram;
  std::size_t max_area_searched = 0;
  std::size_t minimal_solutions = 0;  // distinct diagrams at the minimal area
  std::uint64_t nodes = 0;
  bool node_cap_hit = false;
};

namespace detail {

// Canonical relabelling of a disc whose boundary is 0..n-1 in order and
// whose triangles are consistently oriented with it: breadth-first from the
// boundary, visiting each vertex's neighbors in rotation order.
inline std::vector<Vertex> canonical_relabel(std::size_t vertex_count, std::size_t boundary_len,
                                             const std::vector<Triangle>& oriented) {
  // succ[v][p] = q for oriented triangle (v,p,q) up to rotation.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> succ(vertex_count);
  for (const auto& t : oriented) {
    for (int r = 0; r < 3; ++r) succ[t[r]].push_back({t[(r + 1) % 3], t[(r + 2) % 3]});
  }
  auto next_around = [&](Vertex v, Vertex p) -> std::optional<Vertex> {
    for (auto [a, b] : succ[v]) {
      if (a == p) return b;
    }
    return std::nullopt;
  };
  constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> label(vertex_count, none);
  std::vector<Vertex> parent(vertex_count, none);
  std::vector<Vertex> queue;
  for (Vertex b = 0; b < boundary_len; ++b) {
    label[b] = b;
    queue.push_back(b);
  }
  Vertex next_label = Vertex(boundary_len);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex v = queue[qi];
    Vertex start = v < boundary_len ? Vertex((v + 1) % boundary_len) : parent[v];
    Vertex p = start;
    for (std::size_t guard = 0; guard <= succ[v].size(); ++guard) {
      if (label[p] == none) {
        label[p] = next_label++;
        parent[p] = v;
        queue.push_back(p);
      }
      auto q = next_around(v, p);
      if (!q || *q == start) break;
      p = *q;
    }
  }
  return label;
}

// Front-based growth of a disc together with its map. Every open region is a
// simple polygon of disc vertices ("front"); filling an edge (a,b) of a
// front picks the third vertex of the triangle on its inner side, either a
// vertex of the same front (splitting it) or a fresh interior vertex.
class FillingSearch {
 public:
  FillingSearch(const FlagComplex& X, const Loop& gamma, std::size_t fresh_budget,
                std::uint64_t max_nodes)
      : X_(X), n_(gamma.length()), fresh_budget_(fresh_budget), max_nodes_(max_nodes) {
    capacity_ = n_ + fresh_budget_;
    image_.assign(gamma.vertices.begin(), gamma.vertices.end());
    disc_adj_.assign(capacity_ * capacity_, 0);
    std::vector<Vertex> front(n_);
    for (Vertex i = 0; i < n_; ++i) {
      front[i] = i;
      set_edge(i, Vertex((i + 1) % n_), 1);
    }
    fronts_.push_back(std::move(front));
  }

  void run() { search(); }

  bool node_cap_hit() const { return node_cap_hit_; }
  std::uint64_t nodes() const { return nodes_; }
  std::size_t solutions() const { return solutions_; }
  const std::optional<DiagramMap>& best() const { return best_; }

 private:
  struct Option {
    bool fresh = false;
    Vertex vertex = 0;  // front vertex, or target image for a fresh vertex
  };

  bool has_edge(Vertex a, Vertex b) const { return disc_adj_[a * capacity_ + b] != 0; }
  void set_edge(Vertex a, Vertex b, unsigned char value) {
    disc_adj_[a * capacity_ + b] = disc_adj_[b * capacity_ + a] = value;
  }

  // Options for filling edge i of front f.
  void options_for(const std::vector<Vertex>& front, std::size_t i, std::vector<Option>& out) const {
    out.clear();
    const std::size_t L = front.size();
    const Vertex a = front[i], b = front[(i + 1) % L];
    const Vertex after = front[(i + 2) % L], before = front[(i + L - 1) % L];
    for (std::size_t j = 0; j < L; ++j) {
      const Vertex x = front[j];
      if (x == a || x == b) continue;
      if (!X_.has_triangle(image_[a], image_[b], image_[x])) continue;
      if (x != after && has_edge(b, x)) continue;
      if (x != before && has_edge(x, a)) continue;
      out.push_back({false, x});
    }
    if (used_fresh_ < fresh_budget_) {
      auto na = X_.neighbors(image_[a]);
      auto nb = X_.neighbors(image_[b]);
      std::size_t p = 0, q = 0;
      while (p < na.size() && q < nb.size()) {
        if (na[p] < nb[q]) {
          ++p;
        } else if (nb[q] < na[p]) {
          ++q;
        } else {
          if (X_.has_triangle(image_[a], image_[b], na[p])) out.push_back({true, na[p]});
          ++p;
          ++q;
        }
      }
    }
  }

  void search() {
    if (max_nodes_ && nodes_ >= max_nodes_) {
      node_cap_hit_ = true;
      return;
    }
    ++nodes_;
    if (fronts_.empty()) {
      record_solution();
      return;
    }
    // Pick the most constrained front edge.
    std::size_t best_front = 0, best_edge = 0, best_count = std::numeric_limits<std::size_t>::max();
    std::vector<Option> scratch;
    for (std::size_t f = 0; f < fronts_.size() && best_count > 0; ++f) {
      for (std::size_t i = 0; i < fronts_[f].size(); ++i) {
        options_for(fronts_[f], i, scratch);
        if (scratch.size() < best_count) {
          best_count = scratch.size();
          best_front = f;
          best_edge = i;
          if (best_count == 0) break;
        }
      }
    }
    if (best_count == 0) return;

    std::vector<Option> options;
    options_for(fronts_[best_front], best_edge, options);
    const std::vector<Vertex> original = fronts_[best_front];
    std::vector<Vertex> front = original;
    const std::size_t L = front.size();
    const Vertex a = front[best_edge], b = front[(best_edge + 1) % L];
    // Rotate so the chosen edge is (front[0], front[1]).
    std::rotate(front.begin(), front.begin() + std::ptrdiff_t(best_edge), front.end());

    fronts_.erase(fronts_.begin() + std::ptrdiff_t(best_front));
    for (const auto& opt : options) {
      if (opt.fresh) {
        const Vertex x = Vertex(n_ + used_fresh_);
        image_.push_back(opt.vertex);
        ++used_fresh_;
        set_edge(a, x, 1);
        set_edge(b, x, 1);
        triangles_.push_back({a, b, x});
        std::vector<Vertex> grown;
        grown.reserve(L + 1);
        grown.push_back(a);
        grown.push_back(x);
        grown.insert(grown.end(), front.begin() + 1, front.end());
        fronts_.push_back(std::move(grown));
        search();
        fronts_.pop_back();
        triangles_.pop_back();
        set_edge(a, x, 0);
        set_edge(b, x, 0);
        --used_fresh_;
        image_.pop_back();
      } else {
        const Vertex x = opt.vertex;
        const auto pos = std::size_t(std::find(front.begin(), front.end(), x) - front.begin());
        // front = a, b, ..., x, ..., back to a.
        std::vector<Vertex> right(front.begin() + 1, front.begin() + std::ptrdiff_t(pos) + 1);
        std::vector<Vertex> left(front.begin() + std::ptrdiff_t(pos), front.end());
        left.push_back(a);
        const bool new_bx = right.size() > 2;
        const bool new_xa = left.size() > 2;
        if (new_bx) set_edge(b, x, 1);
        if (new_xa) set_edge(x, a, 1);
        triangles_.push_back({a, b, x});
        std::size_t pushed = 0;
        if (right.size() > 2) {
          fronts_.push_back(right);
          ++pushed;
        }
        if (left.size() > 2) {
          fronts_.push_back(left);
          ++pushed;
        }
        search();
        for (std::size_t k = 0; k < pushed; ++k) fronts_.pop_back();
        triangles_.pop_back();
        if (new_bx) set_edge(b, x, 0);
        if (new_xa) set_edge(x, a, 0);
      }
      if (node_cap_hit_) break;
    }
    fronts_.insert(fronts_.begin() + std::ptrdiff_t(best_front), original);
  }

  void record_solution() {
    const std::size_t V = n_ + used_fresh_;
    auto label = canonical_relabel(V, n_, triangles_);
    DiagramMap M;
    M.disc.vertex_count = V;
    for (Vertex i = 0; i < n_; ++i) M.disc.boundary.push_back(i);
    for (const auto& t : triangles_) {
      M.disc.triangles.push_back(make_triangle(label[t[0]], label[t[1]], label[t[2]]));
    }
    std::sort(M.disc.triangles.begin(), M.disc.triangles.end());
    M.vertex_map.assign(V, 0);
    for (Vertex v = 0; v < V; ++v) M.vertex_map[label[v]] = image_[v];
    if (!disc_is_flag(M.disc)) return;
    ++solutions_;
    if (!best_ || std::tie(M.disc.triangles, M.vertex_map) <
                      std::tie(best_->disc.triangles, best_->vertex_map)) {
      best_ = std::move(M);
    }
  }

  const FlagComplex& X_;
  std::size_t n_;
  std::size_t fresh_budget_;
  std::uint64_t max_nodes_;
  std::size_t capacity_ = 0;
  std::vector<Vertex> image_;
  std::vector<unsigned char> disc_adj_;
  std::vector<std::vector<Vertex>> fronts_;
  std::vector<Triangle> triangles_;
  std::size_t used_fresh_ = 0;
  std::uint64_t nodes_ = 0;
  bool node_cap_hit_ = false;
  std::size_t solutions_ = 0;
  std::optional<DiagramMap> best_;
};

}  // namespace detail

/// Minimum-area simplicial, nondegenerate, flag filling diagram of gamma.
/// A disc with boundary n and i interior vertices has n + 2i - 2 triangles,
/// so the search deepens over i. Among minimal diagrams the one with the
/// least canonical encoding (sorted triangles, then vertex map) is returned.
inline FillingResult find_minimal_filling(const FlagComplex& X, const Loop& gamma,
                                          FillingOptions options = {}) {
  auto loop = make_loop(X, gamma.vertices);
  if (!flagness_check(X).passed()) fail(ErrorKind::not_flag, "target has an empty triangle");
  const std::size_t n = loop.length();
  const std::size_t max_area = options.max_area ? options.max_area : 2 * n;
  FillingResult result;
  for (std::size_t fresh = 0; n + 2 * fresh - 2 <= max_area; ++fresh) {
    detail::FillingSearch search(X, loop, fresh, options.max_nodes);
    search.run();
    result.nodes += search.nodes();
    result.max_area_searched = n + 2 * fresh - 2;
    if (search.node_cap_hit()) {
      result.node_cap_hit = true;
      return result;
    }
    if (search.best()) {
      result.status = FillingStatus::found;
      result.diagram = search.best();
      result.minimal_solutions = search.solutions();
      auto check = validate_map(X, *result.diagram, loop);
      if (!check.passed() || !validate_disc(result.diagram->disc).passed()) {
        fail(ErrorKind::invariant, "filling search produced an invalid diagram");
      }
      return result;
    }
  }
  return result;
}

/// Minimal-diagram audit: disc structure, flagness, simplicial and
/// nondegenerate map, then the 5/9 clauses on the disc itself.
inline ConditionReport verify_minimal_diagram(const FlagComplex& target, const DiagramMap& M) {
  if (!validate_disc(M.disc).passed()) fail(ErrorKind::not_a_disc, "diagram disc is not a 2-disc");
  auto D = disc_complex(M.disc);
  if (!flagness_check(D).passed()) {
    fail(ErrorKind::not_flag_disc, "a 3-clique of the disc bounds no face");
  }
  auto report = make_report(Condition::minimal_diagram);
  auto map_report = validate_map(target, M);
  for (auto& w : map_report.witnesses) report.add(w);
  if (!M.simplicial) report.add(Witness{{}, {}, "simplicial"});
  if (!M.nondegenerate) report.add(Witness{{}, {}, "nondegenerate"});
  auto five_nine = check_five_nine(D);
  for (auto& w : five_nine.witnesses) report.add(w);
  report.largeness_histogram = five_nine.largeness_histogram;
  report.canonicalize();
  return report;
}

inline ConditionReport disc_is_8_located(const TriangulatedDisc& D) {
  if (!validate_disc(D).passed()) fail(ErrorKind::not_a_disc, "input is not a 2-disc");
  auto X = disc_complex(D);
  if (!flagness_check(X).passed()) fail(ErrorKind::not_flag_disc, "a 3-clique of the disc bounds no face");
  return check_m_location(X, 8, TrivialityOracle::all());
}

/// Bounded triviality: a loop is certified trivial when a filling exists
/// within the area budget; otherwise it stays undetermined.
inline Triviality bounded_triviality(const FlagComplex& X, const Loop& loop, std::size_t budget) {
  FillingOptions opts;
  opts.max_area = budget;
  auto r = find_minimal_filling(X, loop, opts);
  return r.status == FillingStatus::found ? Triviality::trivial : Triviality::undetermined;
}

inline ConditionReport check_m_location_with_filling(const FlagComplex& X, std::size_t m,
                                                     const TrivialityOracle& oracle) {
  return check_m_location(X, m, oracle, bounded_triviality);
}

}  // namespace fivenine
