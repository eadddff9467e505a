#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <optional>
#include <string>
#include <vector>

#include "complex.hpp"
#include "cycles.hpp"

namespace fivenine {

/// Length of the shortest full cycle of a complex, or infinite when there is
/// none. A complex is k-large exactly when its largeness is at least k.
class Largeness {
 public:
  constexpr Largeness() = default;
  constexpr explicit Largeness(unsigned value) : value_(value) {}

  static constexpr Largeness infinite() { return Largeness{}; }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr unsigned value() const { return value_; }
  constexpr bool is_k_large(unsigned k) const { return value_ >= k; }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

  friend constexpr auto operator<=>(Largeness, Largeness) = default;

 private:
  static constexpr unsigned kInfinite = std::numeric_limits<unsigned>::max();
  unsigned value_ = kInfinite;
};

/// Exact largeness. The bounded scan (length <= 12) covers every case the
/// curvature conditions need; past it a chordality test decides between
/// "infinite" and a longer exhaustive scan.
inline Largeness largeness_of_complex(const FlagComplex& L) {
  constexpr std::size_t kFirstBound = 12;
  if (auto c = shortest_full_cycle(L, kFirstBound)) return Largeness(unsigned(c->length()));
  if (is_chordal(L)) return Largeness::infinite();
  if (auto c = shortest_full_cycle(L, L.vertex_count())) return Largeness(unsigned(c->length()));
  return Largeness::infinite();
}

inline Largeness largeness_of_complex(const LinkView& link) {
  return largeness_of_complex(link.view.complex);
}

inline Largeness vertex_largeness(const FlagComplex& X, Vertex v) {
  X.require_vertex(v);
  return largeness_of_complex(compute_link(X, v));
}

/// Shortest full cycle of the link of v, in ambient vertex ids.
inline std::optional<Loop> shortest_link_cycle(const FlagComplex& X, Vertex v) {
  auto link = compute_link(X, v);
  auto c = shortest_full_cycle(link.view.complex, link.view.members.size());
  if (!c) return std::nullopt;
  return canonical_loop(Loop{link.view.to_global(c->vertices)});
}

inline std::vector<Largeness> all_vertex_largeness(const FlagComplex& X) {
  std::vector<Largeness> out(X.vertex_count());
  for (Vertex v = 0; v < X.vertex_count(); ++v) out[v] = vertex_largeness(X, v);
  return out;
}

inline std::map<std::string, std::size_t> largeness_histogram(const std::vector<Largeness>& values) {
  std::map<std::string, std::size_t> h;
  for (auto l : values) ++h[l.to_string()];
  return h;
}

inline ConditionReport check_k_large_local(const FlagComplex& X, unsigned k) {
  if (k < 4) fail(ErrorKind::precondition_violated, "k-largeness is checked for k >= 4");
  auto report = make_report(Condition::k_large_local);
  auto values = all_vertex_largeness(X);
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    if (values[v].is_k_large(k)) continue;
    Witness w{{v}, {}, "largeness<" + std::to_string(k)};
    if (auto c = shortest_link_cycle(X, v)) w.loops.push_back(c->vertices);
    report.add(std::move(w));
  }
  report.largeness_histogram = largeness_histogram(values);
  report.canonicalize();
  return report;
}

/// Lower bound that a neighbor of a vertex with largeness `l` must meet:
/// 4 -> 9, 5 -> 8, 6 -> 7. Returns nullopt when no clause applies.
struct FiveNineClause {
  unsigned required;
  const char* tag;
};

inline std::optional<FiveNineClause> five_nine_clause(Largeness l) {
  if (l.is_infinite()) return std::nullopt;
  switch (l.value()) {
    case 4: return FiveNineClause{9, "5/9"};
    case 5: return FiveNineClause{8, "6/8"};
    case 6: return FiveNineClause{7, "7/7"};
    default: return std::nullopt;
  }
}

/// Checks the three clauses on the given per-vertex largeness table.
/// Witness: vertices (v, w) with v the constrained vertex and w its
/// neighbor below the bound; loops are their shortest link cycles.
inline ConditionReport five_nine_from_largeness(const FlagComplex& X,
                                                const std::vector<Largeness>& values,
                                                bool attach_loops = true) {
  auto report = make_report(Condition::five_nine);
  for (Vertex v = 0; v < X.vertex_count(); ++v) {
    auto clause = five_nine_clause(values[v]);
    if (!clause) continue;
    for (Vertex w : X.neighbors(v)) {
      if (values[w].is_k_large(clause->required)) continue;
      Witness wit{{v, w}, {}, clause->tag};
      if (attach_loops) {
        for (Vertex x : {v, w}) {
          if (auto c = shortest_link_cycle(X, x)) wit.loops.push_back(c->vertices);
        }
      }
      report.add(std::move(wit));
    }
  }
  report.largeness_histogram = largeness_histogram(values);
  report.canonicalize();
  return report;
}

inline ConditionReport check_five_nine(const FlagComplex& X) {
  if (!flagness_check(X).passed()) {
    fail(ErrorKind::not_flag, "the complex has an empty triangle");
  }
  return five_nine_from_largeness(X, all_vertex_largeness(X));
}

/// Adjacent pairs of gamma that are not consecutive on it, least first.
inline std::vector<Edge> find_diagonals(const FlagComplex& X, const Loop& gamma) {
  auto loop = make_loop(X, gamma.vertices);
  const std::size_t n = loop.length();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (X.adjacent(loop[i], loop[j])) out.push_back(make_edge(loop[i], loop[j]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_wheel(const FlagComplex& X, Vertex hub, const Loop& rim) {
  X.require_vertex(hub);
  auto loop = make_loop(X, rim.vertices);
  if (!find_diagonals(X, loop).empty()) return false;
  return std::all_of(loop.vertices.begin(), loop.vertices.end(),
                     [&](Vertex v) { return v != hub && X.adjacent(hub, v); });
}

/// Vertices v with every vertex of `vertices` inside B1(v).
inline std::vector<Vertex> one_ball_centers(const FlagComplex& X, std::span<const Vertex> vertices) {
  std::vector<Vertex> out;
  if (vertices.empty()) return out;
  std::vector<Vertex> candidates(X.neighbors(vertices[0]).begin(), X.neighbors(vertices[0]).end());
  candidates.push_back(vertices[0]);
  std::sort(candidates.begin(), candidates.end());
  for (Vertex c : candidates) {
    bool covers = std::all_of(vertices.begin(), vertices.end(),
                              [&](Vertex v) { return v == c || X.adjacent(v, c); });
    if (covers) out.push_back(c);
  }
  return out;
}

/// How homotopical triviality of loops is established for m-location.
struct TrivialityOracle {
  enum class Kind { all, bounded };
  Kind kind = Kind::all;
  std::size_t area_budget = 0;

  static TrivialityOracle all() { return {Kind::all, 0}; }
  static TrivialityOracle bounded(std::size_t budget) { return {Kind::bounded, budget}; }
};

enum class Triviality { trivial, undetermined };

/// Decides triviality of a single loop under a bounded budget. Supplied by
/// the filling module; kept as a callback so curvature does not depend on it.
using BoundedTrivialityFn = std::function<Triviality(const FlagComplex&, const Loop&, std::size_t)>;

/// m-location. Loops covered by some 1-ball pass regardless of triviality;
/// an uncovered loop is a witness when certified trivial and lands in the
/// undetermined bucket otherwise.
inline ConditionReport check_m_location(const FlagComplex& X, std::size_t m,
                                        const TrivialityOracle& oracle,
                                        const BoundedTrivialityFn& bounded = {}) {
  if (oracle.kind == TrivialityOracle::Kind::all && X.simply_connected() != true) {
    fail(ErrorKind::missing_triviality_evidence,
         "triviality 'all' needs simply_connected metadata set to true; give a filling budget");
  }
  if (oracle.kind == TrivialityOracle::Kind::bounded && !bounded) {
    fail(ErrorKind::missing_triviality_evidence, "no bounded triviality procedure supplied");
  }
  if (!flagness_check(X).passed()) fail(ErrorKind::not_flag, "the complex has an empty triangle");
  auto report = make_report(Condition::m_location);
  std::size_t examined = 0;
  for (const auto& loop : enumerate_full_cycles(X, m)) {
    ++examined;
    if (!one_ball_centers(X, loop.vertices).empty()) continue;
    if (oracle.kind == TrivialityOracle::Kind::all ||
        bounded(X, loop, oracle.area_budget) == Triviality::trivial) {
      report.witnesses.push_back(Witness{{}, {loop.vertices}, "uncovered"});
    } else {
      report.undetermined.push_back(loop.vertices);
    }
  }
  report.counters["full_loops_examined"] = examined;
  report.canonicalize();
  return report;
}

}  // namespace fivenine
