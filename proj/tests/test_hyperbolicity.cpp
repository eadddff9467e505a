#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fivenine/fivenine.hpp"
#include "oracles.hpp"

using namespace fivenine;

namespace {

FlagComplex relabel(const FlagComplex& X, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : X.edges()) edges.push_back(make_edge(perm[u], perm[v]));
  return FlagComplex(X.vertex_count(), edges);
}

FlagComplex random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({Vertex(rng() % v), v});
  return FlagComplex(n, edges);
}

std::uint64_t twice_defect_of(const FlagComplex& X, const std::array<Vertex, 4>& q) {
  auto d = oracle::floyd_warshall(X);
  std::array<std::uint64_t, 3> s{d[q[0]][q[1]] + d[q[2]][q[3]], d[q[0]][q[2]] + d[q[1]][q[3]],
                                 d[q[0]][q[3]] + d[q[1]][q[2]]};
  std::sort(s.begin(), s.end());
  return s[2] - s[1];
}

}  // namespace

TEST(HalfInteger, Rendering) {
  EXPECT_EQ(HalfInteger::from_twice(0).to_string(), "0");
  EXPECT_EQ(HalfInteger::from_twice(2).to_string(), "1");
  EXPECT_EQ(HalfInteger::from_twice(3).to_string(), "3/2");
  EXPECT_LT(HalfInteger::from_twice(3), HalfInteger::from_twice(4));
}

TEST(FourPointDelta, Trees) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto T = random_tree(15, seed);
    EXPECT_EQ(four_point_delta(T).delta.twice(), 0u);
  }
  EXPECT_EQ(four_point_delta(path_graph(12)).delta.twice(), 0u);
}

TEST(FourPointDelta, CompleteGraphs) {
  for (std::size_t n = 4; n <= 9; ++n) EXPECT_EQ(four_point_delta(simplex(n)).delta.twice(), 0u);
}

TEST(FourPointDelta, SixCycle) {
  auto C6 = cycle_graph(6);
  EXPECT_EQ(oracle::brute_twice_delta(C6), 2u);
  auto r = four_point_delta(C6);
  EXPECT_EQ(r.delta.to_string(), "1");
  EXPECT_EQ(twice_defect_of(C6, r.witness), 2u);
}

TEST(FourPointDelta, MatchesBruteForceAndWitnessAttains) {
  std::vector<FlagComplex> complexes{cycle_graph(5), cycle_graph(7), cycle_graph(10),
                                     gen_platonic(Platonic::octahedron), gen_platonic(Platonic::icosahedron),
                                     gen_tiling_patch(6, 2), gen_cone(cycle_graph(9))};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto X = gen_random_flag(14, 0.3, seed);
    if (is_connected(X)) complexes.push_back(X);
  }
  for (const auto& X : complexes) {
    auto r = four_point_delta(X);
    EXPECT_EQ(r.delta.twice(), oracle::brute_twice_delta(X));
    EXPECT_EQ(twice_defect_of(X, r.witness), r.delta.twice());
    EXPECT_TRUE(std::is_sorted(r.witness.begin(), r.witness.end()));
  }
}

TEST(FourPointDelta, InvariantUnderRelabeling) {
  std::mt19937_64 rng(11);
  for (const auto& X : {gen_tiling_patch(6, 3), gen_tiling_patch(7, 2), cycle_graph(9)}) {
    const auto base = four_point_delta(X).delta;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Vertex> perm(X.vertex_count());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(four_point_delta(relabel(X, perm)).delta, base);
    }
  }
}

TEST(FourPointDelta, SampledNeverExceedsExact) {
  for (const auto& X : {gen_tiling_patch(6, 4), gen_tiling_patch(7, 3), cycle_graph(13)}) {
    const auto exact = four_point_delta(X).delta;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      auto s = four_point_delta(X, DeltaMethod::sampled(2000, seed));
      EXPECT_LE(s.delta, exact);
      EXPECT_EQ(twice_defect_of(X, s.witness), s.delta.twice());
      EXPECT_EQ(s.method.kind, DeltaMethod::Kind::sampled);
    }
  }
}

TEST(FourPointDelta, SampledIsDeterministic) {
  auto X = gen_tiling_patch(7, 3);
  auto a = four_point_delta(X, DeltaMethod::sampled(5000, 9));
  auto b = four_point_delta(X, DeltaMethod::sampled(5000, 9));
  EXPECT_EQ(a.delta, b.delta);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(FourPointDelta, Errors) {
  FlagComplex two(4, std::vector<Edge>{{0, 1}, {2, 3}});
  try {
    four_point_delta(two);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::disconnected);
  }
  auto big = path_graph(301);
  try {
    four_point_delta(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::too_large_for_exact);
  }
  EXPECT_EQ(four_point_delta(big, DeltaMethod::sampled(1000, 1)).delta.twice(), 0u);
}

TEST(DeltaProfile, PathsAreZero) {
  auto rows = delta_growth_profile([](unsigned r) { return path_graph(r + 1); }, {3, 10, 50, 400}, 5000, 1);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& row : rows) EXPECT_EQ(row.delta.delta.twice(), 0u);
  EXPECT_EQ(rows[3].delta.method.kind, DeltaMethod::Kind::sampled);
  EXPECT_EQ(rows[0].delta.method.kind, DeltaMethod::Kind::exact);
}

TEST(DeltaProfile, EuclideanPatchesGrow) {
  auto rows = delta_growth_profile([](unsigned r) { return gen_tiling_patch(6, r); }, {2, 3, 4, 5});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].delta.method.kind, DeltaMethod::Kind::exact);
    EXPECT_EQ(rows[i].vertex_count, oracle::tiling_vertex_count(6, rows[i].radius));
  }
  EXPECT_LT(rows[1].delta.delta, rows[2].delta.delta);
  EXPECT_LT(rows[2].delta.delta, rows[3].delta.delta);
}
