#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "complex.hpp"

namespace fivenine {

/// Non-negative half-integer, stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(std::uint64_t twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }

  constexpr std::uint64_t twice() const { return twice_; }

  /// "0", "1", "3/2", ...
  std::string to_string() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  std::uint64_t twice_ = 0;
};

struct DeltaMethod {
  enum class Kind { exact, sampled };
  Kind kind = Kind::exact;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static DeltaMethod exact() { return {}; }
  static DeltaMethod sampled(std::uint64_t k, std::uint64_t seed) { return {Kind::sampled, k, seed}; }
};

struct DeltaResult {
  HalfInteger delta;
  std::array<Vertex, 4> witness{};
  DeltaMethod method;
};

constexpr std::size_t kExactDeltaLimit = 300;

namespace detail {

// Twice the four-point defect: largest minus second-largest pairing sum.
inline std::uint64_t twice_defect(const std::vector<std::size_t>& d, std::size_t n, Vertex x,
                                  Vertex y, Vertex z, Vertex w) {
  std::uint64_t s1 = d[x * n + y] + d[z * n + w];
  std::uint64_t s2 = d[x * n + z] + d[y * n + w];
  std::uint64_t s3 = d[x * n + w] + d[y * n + z];
  if (s1 < s2) std::swap(s1, s2);
  if (s2 < s3) std::swap(s2, s3);
  if (s1 < s2) std::swap(s1, s2);
  return s1 - s2;
}

}  // namespace detail

/// Four-point Gromov delta of the 1-skeleton metric. The exact scan visits
/// quadruples x<y<z<w in lexicographic order and keeps the first maximum,
/// so the witness is the least maximizing quadruple.
inline DeltaResult four_point_delta(const FlagComplex& X, DeltaMethod method = DeltaMethod::exact()) {
  const std::size_t n = X.vertex_count();
  if (!is_connected(X)) fail(ErrorKind::disconnected, "four-point delta needs a connected complex");
  if (method.kind == DeltaMethod::Kind::exact && n > kExactDeltaLimit) {
    fail(ErrorKind::too_large_for_exact,
         std::to_string(n) + " vertices exceeds the exact limit of " + std::to_string(kExactDeltaLimit));
  }
  const auto d = all_pairs_distances(X);
  DeltaResult result;
  result.method = method;
  if (n < 4) return result;
  std::uint64_t best = 0;
  bool have = false;

  if (method.kind == DeltaMethod::Kind::exact) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        for (Vertex z = y + 1; z < n; ++z) {
          for (Vertex w = z + 1; w < n; ++w) {
            const auto t = detail::twice_defect(d, n, x, y, z, w);
            if (!have || t > best) {
              best = t;
              have = true;
              result.witness = {x, y, z, w};
            }
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(method.seed);
    for (std::uint64_t s = 0; s < method.samples; ++s) {
      std::array<Vertex, 4> q{};
      // Rejection-sample four distinct vertices.
      for (int i = 0; i < 4;) {
        Vertex v = Vertex(rng() % n);
        if (std::find(q.begin(), q.begin() + i, v) == q.begin() + i) q[i++] = v;
      }
      std::sort(q.begin(), q.end());
      const auto t = detail::twice_defect(d, n, q[0], q[1], q[2], q[3]);
      if (!have || t > best || (t == best && q < result.witness)) {
        best = t;
        have = true;
        result.witness = q;
      }
    }
  }
  result.delta = HalfInteger::from_twice(best);
  return result;
}

struct DeltaProfileRow {
  unsigned radius = 0;
  std::size_t vertex_count = 0;
  DeltaResult delta;
};

/// Delta per radius of a generated family. Instances above the exact limit
/// fall back to seeded sampling with `samples` quadruples.
inline std::vector<DeltaProfileRow> delta_growth_profile(
    const std::function<FlagComplex(unsigned)>& family, const std::vector<unsigned>& radii,
    std::uint64_t samples = 200000, std::uint64_t seed = 1) {
  std::vector<DeltaProfileRow> rows;
  for (unsigned r : radii) {
    auto X = family(r);
    auto method = X.vertex_count() <= kExactDeltaLimit ? DeltaMethod::exact()
                                                        : DeltaMethod::sampled(samples, seed);
    rows.push_back({r, X.vertex_count(), four_point_delta(X, method)});
  }
  return rows;
}

}  // namespace fivenine
