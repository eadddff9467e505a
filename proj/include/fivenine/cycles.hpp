#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "complex.hpp"

namespace fivenine {

namespace detail {

// Depth-first growth of chordless paths p0 < p1..pk (p0 is the least vertex
// of any cycle found). A new vertex may touch p0 only when it closes the
// cycle, and may never touch p1..p(k-1). `on_cycle` returns false to stop.
class ChordlessCycleSearch {
 public:
  ChordlessCycleSearch(const FlagComplex& X, std::size_t max_len,
                       std::function<bool(const std::vector<Vertex>&)> on_cycle)
      : X_(X), max_len_(max_len), on_cycle_(std::move(on_cycle)) {}

  // Returns false if the callback requested a stop.
  bool run_from(Vertex start) {
    path_.assign(1, start);
    for (Vertex w : X_.neighbors(start)) {
      if (w <= start) continue;
      path_.push_back(w);
      bool keep_going = extend(start);
      path_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  bool run() {
    for (Vertex s = 0; s < X_.vertex_count(); ++s) {
      if (!run_from(s)) return false;
    }
    return true;
  }

 private:
  bool extend(Vertex start) {
    const Vertex last = path_.back();
    const std::size_t k = path_.size();  // vertices on the path
    for (Vertex v : X_.neighbors(last)) {
      if (v <= start || std::find(path_.begin(), path_.end(), v) != path_.end()) {
        continue;
      }
      bool touches_interior = false;
      for (std::size_t i = 1; i + 1 < k; ++i) {
        if (X_.adjacent(v, path_[i])) {
          touches_interior = true;
          break;
        }
      }
      if (touches_interior) continue;
      if (X_.adjacent(v, start)) {
        // Closing vertex; orient so that p1 < v to report each cycle once.
        if (path_[1] < v && k + 1 <= max_len_) {
          path_.push_back(v);
          bool keep_going = on_cycle_(path_);
          path_.pop_back();
          if (!keep_going) return false;
        }
        continue;
      }
      if (k + 1 >= max_len_) continue;  // the closing vertex would exceed the bound
      path_.push_back(v);
      bool keep_going = extend(start);
      path_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const FlagComplex& X_;
  std::size_t max_len_;
  std::function<bool(const std::vector<Vertex>&)> on_cycle_;
  std::vector<Vertex> path_;
};

inline std::vector<Loop> empty_triangles(const FlagComplex& X) {
  std::vector<Loop> out;
  if (X.clique_mode()) return out;
  for (Vertex a = 0; a < X.vertex_count(); ++a) {
    for (Vertex b : X.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : X.neighbors(b)) {
        if (c <= b || !X.adjacent(a, c) || X.has_triangle(a, b, c)) continue;
        out.push_back(Loop{{a, b, c}});
      }
    }
  }
  return out;
}

}  // namespace detail

/// All full (induced, chordless) cycles of length 4..max_len in canonical
/// form, sorted by (length, vertices). In explicit-triangle mode empty
/// triangles are full 3-cycles and are included.
inline std::vector<Loop> enumerate_full_cycles(const FlagComplex& X, std::size_t max_len = 12) {
  std::vector<Loop> out = detail::empty_triangles(X);
  if (max_len < 3) return {};
  detail::ChordlessCycleSearch search(X, max_len, [&](const std::vector<Vertex>& cycle) {
    if (cycle.size() >= 4) out.push_back(Loop{cycle});
    return true;
  });
  search.run();
  std::sort(out.begin(), out.end(), [](const Loop& a, const Loop& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

/// Least canonical full cycle among those of minimum length, with length at
/// most `max_len`; iterative deepening keeps the search shallow.
inline std::optional<Loop> shortest_full_cycle(const FlagComplex& X, std::size_t max_len) {
  auto triangles = detail::empty_triangles(X);
  if (!triangles.empty()) return triangles.front();
  for (std::size_t len = 4; len <= max_len; ++len) {
    std::optional<Loop> best;
    detail::ChordlessCycleSearch search(X, len, [&](const std::vector<Vertex>& cycle) {
      if (cycle.size() == len) {
        Loop loop{cycle};
        if (!best || loop < *best) best = loop;
      }
      return true;
    });
    search.run();
    if (best) return best;
  }
  return std::nullopt;
}

/// Chordality test via maximum cardinality search followed by a perfect
/// elimination ordering check. Chordal graphs have no full cycle of length
/// four or more.
inline bool is_chordal(const FlagComplex& X) {
  const std::size_t n = X.vertex_count();
  std::vector<std::size_t> weight(n, 0);
  std::vector<unsigned char> numbered(n, 0);
  std::vector<Vertex> order(n);  // order[i] = vertex numbered i (reverse elimination)
  std::vector<std::size_t> position(n);
  for (std::size_t i = n; i-- > 0;) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && (!found || weight[v] > weight[pick])) {
        pick = v;
        found = true;
      }
    }
    numbered[pick] = 1;
    order[i] = pick;
    position[pick] = i;
    for (Vertex w : X.neighbors(pick)) {
      if (!numbered[w]) ++weight[w];
    }
  }
  // order is a perfect elimination ordering iff for each v, its later
  // neighbors minus the earliest of them are all adjacent to that earliest one.
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex w : X.neighbors(v)) {
      if (position[w] > i) later.push_back(w);
    }
    if (later.empty()) continue;
    Vertex parent = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) {
      return position[a] < position[b];
    });
    for (Vertex w : later) {
      if (w != parent && !X.adjacent(w, parent)) return false;
    }
  }
  return true;
}

}  // namespace fivenine
