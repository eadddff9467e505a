#include <gtest/gtest.h>

#include <random>

#include "fivenine/fivenine.hpp"
#include "oracles.hpp"

using namespace fivenine;

namespace {

std::vector<FlagComplex> small_corpus() {
  std::vector<FlagComplex> out;
  out.push_back(gen_platonic(Platonic::octahedron));
  out.push_back(gen_platonic(Platonic::icosahedron));
  out.push_back(cycle_graph(5));
  out.push_back(cycle_graph(7));
  out.push_back(simplex(5));
  out.push_back(gen_cone(cycle_graph(9)));
  out.push_back(gen_tiling_patch(6, 1));
  out.push_back(gen_tiling_patch(7, 1));
  for (std::uint64_t seed = 1; seed <= 6; ++seed) out.push_back(gen_random_flag(12, 0.3, seed));
  return out;
}

}  // namespace

TEST(LoadComplex, EdgeListTriangle) {
  auto X = load_complex("0 1\n1 2\n2 0\n", InputFormat::edge_list);
  EXPECT_EQ(X.vertex_count(), 3u);
  EXPECT_EQ(X.edge_count(), 3u);
  EXPECT_TRUE(X.has_triangle(0, 1, 2));
  EXPECT_TRUE(flagness_check(X).passed());
}

TEST(LoadComplex, EdgeListCommentsAndBlankLines) {
  auto X = load_complex("# square\n0 1\n\n1 2 # side\n2 3\n3 0\n", InputFormat::edge_list);
  EXPECT_EQ(X.vertex_count(), 4u);
  EXPECT_EQ(X.edge_count(), 4u);
}

TEST(LoadComplex, SelfLoopIsInvariantError) {
  try {
    load_complex("0 0\n", InputFormat::edge_list);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invariant);
  }
}

TEST(LoadComplex, DuplicateEdgeInEitherOrderIsInvariantError) {
  for (const char* text : {"0 1\n0 1\n", "0 1\n1 0\n"}) {
    try {
      load_complex(text, InputFormat::edge_list);
      FAIL() << "expected an error for " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::invariant);
    }
  }
  try {
    load_complex(R"({"vertices":2,"edges":[[0,1],[1,0]]})", InputFormat::json);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invariant);
  }
}

TEST(LoadComplex, MalformedInputIsParseError) {
  for (const char* text : {"0 1 2\n", "a b\n", "0 -1\n", "1\n"}) {
    try {
      load_complex(text, InputFormat::edge_list);
      FAIL() << "expected ParseError for " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::parse) << text;
    }
  }
  for (const char* text : {"{", R"({"edges":[]})", R"({"vertices":3,"edges":[[0,1,2]]})",
                           R"({"vertices":3,"edges":[[0,1]],"version":"other"})",
                           R"({"vertices":"3","edges":[]})"}) {
    try {
      load_complex(text, InputFormat::json);
      FAIL() << "expected ParseError for " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::parse) << text;
    }
  }
}

TEST(LoadComplex, OutOfRangeEdgeIsInvariantError) {
  try {
    load_complex(R"({"vertices":2,"edges":[[0,2]]})", InputFormat::json);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invariant);
  }
}

TEST(LoadComplex, OctahedronJsonHasEightTriangles) {
  const char* text = R"({"vertices":6,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[2,3],[3,4],[1,4],
                          [1,5],[2,5],[3,5],[4,5]]})";
  auto X = load_complex(text);
  std::size_t triangles = 0;
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = a + 1; b < 6; ++b) {
      for (Vertex c = b + 1; c < 6; ++c) {
        triangles += X.adjacent(a, b) && X.adjacent(b, c) && X.adjacent(a, c);
      }
    }
  }
  EXPECT_EQ(triangles, 8u);
  EXPECT_TRUE(X.clique_mode());
  EXPECT_FALSE(X.adjacent(0, 5));
  EXPECT_FALSE(X.adjacent(1, 3));
  EXPECT_FALSE(X.adjacent(2, 4));
}

TEST(LoadComplex, JsonRoundTrip) {
  auto X = gen_tiling_patch(7, 2);
  X.set_labels(std::vector<std::string>(X.vertex_count(), "v"));
  auto text = to_json(X).dump();
  auto Y = load_complex(text);
  EXPECT_EQ(X, Y);
  EXPECT_EQ(to_json(Y).dump(), text);
  EXPECT_EQ(Y.simply_connected(), std::optional<bool>(true));

  std::vector<Triangle> faces{{0, 1, 2}};
  auto edges = std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  FlagComplex E(4, edges, faces);
  auto Z = load_complex(to_json(E).dump());
  EXPECT_FALSE(Z.clique_mode());
  EXPECT_EQ(Z, E);
}

TEST(FlagComplexInvariants, TriangleNeedsItsEdges) {
  std::vector<Edge> edges{{0, 1}, {1, 2}};
  try {
    FlagComplex(3, edges, std::vector<Triangle>{{0, 1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invariant);
  }
}

TEST(Flagness, EmptyTriangleFails) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  FlagComplex X(3, edges, std::vector<Triangle>{});
  auto r = flagness_check(X);
  EXPECT_EQ(r.verdict, Verdict::fail);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].vertices, (std::vector<Vertex>{0, 1, 2}));
}

TEST(Flagness, CliqueModePasses) {
  EXPECT_TRUE(flagness_check(gen_platonic(Platonic::octahedron)).passed());
}

TEST(Flagness, OctahedronWithAllFacesListed) {
  auto O = gen_platonic(Platonic::octahedron);
  std::vector<Triangle> faces;
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = a + 1; b < 6; ++b) {
      for (Vertex c = b + 1; c < 6; ++c) {
        if (O.adjacent(a, b) && O.adjacent(b, c) && O.adjacent(a, c)) faces.push_back({a, b, c});
      }
    }
  }
  ASSERT_EQ(faces.size(), 8u);
  auto edges = O.edges();
  FlagComplex X(6, edges, faces);
  EXPECT_TRUE(flagness_check(X).passed());
  faces.pop_back();
  FlagComplex Y(6, edges, faces);
  EXPECT_FALSE(flagness_check(Y).passed());
}

TEST(Link, ConeOverPath) {
  auto C = gen_cone(path_graph(3));
  auto link = compute_link(C, Vertex(3));
  EXPECT_EQ(link.view.members, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(link.view.complex.edge_count(), 2u);
  EXPECT_TRUE(link.view.complex.adjacent(0, 1));
  EXPECT_TRUE(link.view.complex.adjacent(1, 2));
  EXPECT_FALSE(link.view.complex.adjacent(0, 2));
}

TEST(Link, OctahedronVertexIsFourCycle) {
  auto O = gen_platonic(Platonic::octahedron);
  for (Vertex v = 0; v < 6; ++v) {
    auto link = compute_link(O, v);
    auto expected = oracle::neighbors_of(O, v);
    EXPECT_EQ(link.view.members, expected);
    ASSERT_EQ(link.view.members.size(), 4u);
    for (Vertex i = 0; i < 4; ++i) {
      std::size_t deg = 0;
      for (Vertex j = 0; j < 4; ++j) deg += link.view.complex.adjacent(i, j);
      EXPECT_EQ(deg, 2u);
    }
  }
}

TEST(Link, IsolatedVertexIsEmpty) {
  FlagComplex X(3, std::vector<Edge>{{0, 1}});
  EXPECT_TRUE(compute_link(X, Vertex(2)).view.members.empty());
}

TEST(Link, EdgeLinkIsCommonNeighbors) {
  auto O = gen_platonic(Platonic::octahedron);
  std::vector<Vertex> sigma{0, 1};
  EXPECT_EQ(compute_link(O, sigma).view.members, (std::vector<Vertex>{2, 4}));
}

TEST(Link, NotASimplex) {
  auto O = gen_platonic(Platonic::octahedron);
  for (auto sigma : {std::vector<Vertex>{0, 5}, std::vector<Vertex>{9}}) {
    try {
      compute_link(O, sigma);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::not_a_simplex);
    }
  }
}

TEST(Link, EqualsInducedNeighborGraph) {
  for (const auto& X : small_corpus()) {
    for (Vertex v = 0; v < X.vertex_count(); ++v) {
      auto link = compute_link(X, v);
      auto nb = oracle::neighbors_of(X, v);
      ASSERT_EQ(link.view.members, nb);
      for (Vertex i = 0; i < nb.size(); ++i) {
        for (Vertex j = 0; j < nb.size(); ++j) {
          if (i != j) {
            EXPECT_EQ(link.view.complex.adjacent(i, j), X.adjacent(nb[i], nb[j]));
          }
        }
      }
    }
  }
}

TEST(Span, AllVerticesGivesX) {
  auto O = gen_platonic(Platonic::octahedron);
  std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
  auto S = span(O, all).complex;
  EXPECT_EQ(S.vertex_count(), O.vertex_count());
  EXPECT_EQ(S.edges(), O.edges());
}

TEST(Span, OctahedronEquatorIsChordlessFourCycle) {
  auto O = gen_platonic(Platonic::octahedron);
  std::vector<Vertex> eq{1, 2, 3, 4};
  auto S = span(O, eq);
  EXPECT_EQ(S.complex.edge_count(), 4u);
  EXPECT_EQ(largeness_of_complex(S.complex).value(), 4u);
}

TEST(Span, SingleVertexAndUnknownVertex) {
  auto O = gen_platonic(Platonic::octahedron);
  std::vector<Vertex> one{3};
  auto S = span(O, one);
  EXPECT_EQ(S.complex.vertex_count(), 1u);
  EXPECT_EQ(S.complex.edge_count(), 0u);
  std::vector<Vertex> bad{7};
  try {
    span(O, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_vertex);
  }
}

TEST(Span, Idempotent) {
  std::mt19937_64 rng(7);
  for (const auto& X : small_corpus()) {
    std::vector<Vertex> A;
    for (Vertex v = 0; v < X.vertex_count(); ++v) {
      if (rng() % 2) A.push_back(v);
    }
    auto S = span(X, A);
    std::vector<Vertex> local(S.members.size());
    for (Vertex i = 0; i < local.size(); ++i) local[i] = i;
    auto SS = span(S.complex, local);
    EXPECT_EQ(SS.complex, S.complex);
  }
}

TEST(FullSubcomplex, Examples) {
  auto K4 = simplex(4);
  std::vector<Vertex> square{0, 1, 2, 3};
  std::vector<Edge> cycle_edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  EXPECT_FALSE(is_full_subcomplex(K4, square, cycle_edges));

  auto O = gen_platonic(Platonic::octahedron);
  std::vector<Vertex> eq{1, 2, 3, 4};
  std::vector<Edge> eq_edges{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
  EXPECT_TRUE(is_full_subcomplex(O, eq, eq_edges));

  std::vector<Vertex> pair{0, 1};
  std::vector<Edge> one_edge{{0, 1}};
  EXPECT_TRUE(is_full_subcomplex(O, pair, one_edge));

  std::vector<Vertex> bad{0, 9};
  try {
    is_full_subcomplex(O, bad, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_vertex);
  }
}

TEST(FullCycles, Pentagon) {
  auto cycles = enumerate_full_cycles(cycle_graph(5), 9);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(FullCycles, OctahedronHasThreeFourCycles) {
  auto cycles = enumerate_full_cycles(gen_platonic(Platonic::octahedron), 9);
  ASSERT_EQ(cycles.size(), 3u);
  for (const auto& c : cycles) EXPECT_EQ(c.length(), 4u);
}

TEST(FullCycles, K5HasNone) { EXPECT_TRUE(enumerate_full_cycles(simplex(5), 9).empty()); }

TEST(FullCycles, MatchSubsetOracle) {
  for (const auto& X : small_corpus()) {
    if (X.vertex_count() > 16) continue;
    for (std::size_t max_len : {4u, 6u, 9u, 12u}) {
      auto expected = oracle::induced_cycle_sets(X, max_len);
      auto cycles = enumerate_full_cycles(X, max_len);
      std::set<std::vector<Vertex>> got;
      for (const auto& c : cycles) {
        auto key = c.vertices;
        std::sort(key.begin(), key.end());
        EXPECT_TRUE(got.insert(key).second) << "cycle reported twice";
      }
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(FullCycles, CanonicalFullAndChordless) {
  for (const auto& X : small_corpus()) {
    for (const auto& c : enumerate_full_cycles(X, 10)) {
      EXPECT_GE(c.length(), 4u);
      EXPECT_EQ(canonical_loop(c), c);
      EXPECT_TRUE(find_diagonals(X, c).empty());
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < c.length(); ++i) edges.push_back(make_edge(c[i], c[i + 1]));
      EXPECT_TRUE(is_full_subcomplex(X, c.vertices, edges));
    }
  }
}

TEST(FullCycles, ExplicitModeReportsEmptyTriangles) {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  FlagComplex X(3, edges, std::vector<Triangle>{});
  auto cycles = enumerate_full_cycles(X, 9);
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].length(), 3u);
}

TEST(CanonicalLoop, LeastRotationOrReflection) {
  Loop l{{3, 1, 4, 2}};
  EXPECT_EQ(canonical_loop(l).vertices, (std::vector<Vertex>{1, 3, 2, 4}));
  Loop m{{2, 0, 1}};
  EXPECT_EQ(canonical_loop(m).vertices, (std::vector<Vertex>{0, 1, 2}));
}

TEST(MakeLoop, Errors) {
  auto C = cycle_graph(6);
  for (auto vs : {std::vector<Vertex>{0, 1}, std::vector<Vertex>{0, 1, 2},
                  std::vector<Vertex>{0, 1, 2, 1}, std::vector<Vertex>{0, 1, 2, 3, 4, 9}}) {
    try {
      make_loop(C, vs);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::not_a_loop);
    }
  }
  EXPECT_EQ(make_loop(C, {0, 1, 2, 3, 4, 5}).length(), 6u);
}

TEST(Distance, Examples) {
  auto O = gen_platonic(Platonic::octahedron);
  EXPECT_EQ(distance(O, 2, 2), 0u);
  EXPECT_EQ(distance(O, 0, 5), 2u);
  EXPECT_EQ(distance(O, 1, 3), 2u);
  FlagComplex two(4, std::vector<Edge>{{0, 1}, {2, 3}});
  EXPECT_EQ(distance(two, 0, 3), unreachable);
  EXPECT_FALSE(is_connected(two));
  try {
    distance(O, 0, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_vertex);
  }
}

TEST(Distance, MatchesFloydWarshallAndIsAMetric) {
  auto corpus = small_corpus();
  corpus.push_back(gen_tiling_patch(6, 3));
  corpus.push_back(gen_tiling_patch(7, 2));
  for (const auto& X : corpus) {
    if (X.vertex_count() > 60) continue;
    auto fw = oracle::floyd_warshall(X);
    const auto n = X.vertex_count();
    auto d = all_pairs_distances(X);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        const auto duv = d[u * n + v];
        if (fw[u][v] >= oracle::kInf) {
          EXPECT_EQ(duv, unreachable);
          continue;
        }
        EXPECT_EQ(duv, fw[u][v]);
        EXPECT_EQ(duv, d[v * n + u]);
        EXPECT_EQ(duv == 0, u == v);
        for (Vertex w = 0; w < n; ++w) {
          if (d[v * n + w] != unreachable) {
            EXPECT_LE(duv, d[u * n + w] + d[w * n + v]);
          }
        }
      }
    }
  }
}

TEST(Ball, Examples) {
  auto O = gen_platonic(Platonic::octahedron);
  EXPECT_EQ(ball(O, 0, 1).members, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_EQ(sphere(O, 3, 0).members, (std::vector<Vertex>{3}));
  EXPECT_EQ(ball(O, 3, 0).members, (std::vector<Vertex>{3}));
  EXPECT_EQ(ball(O, 0, 5).complex.edges(), O.edges());
  EXPECT_EQ(ball(O, 0, 5).members.size(), 6u);
  EXPECT_EQ(sphere(O, 0, 2).members, (std::vector<Vertex>{5}));
  try {
    ball(O, 8, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unknown_vertex);
  }
}
