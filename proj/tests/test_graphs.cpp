#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace fusion;

namespace {

FusionGraph undirected(std::size_t v, const std::vector<std::pair<Index, Index>>& edges,
                       Index base = 0) {
  FusionGraph g;
  for (Index i = 0; i < v; ++i) g.labels.push_back("v" + std::to_string(i));
  g.adjacency.assign(v, std::vector<Integer>(v));
  for (auto [a, b] : edges) {
    g.adjacency[a][b] += 1;
    if (a != b) g.adjacency[b][a] += 1;
  }
  g.base = base;
  g.self_dual = true;
  return g;
}

FusionGraph path(std::size_t vertices) {
  std::vector<std::pair<Index, Index>> e;
  for (Index i = 0; i + 1 < vertices; ++i) e.emplace_back(i, i + 1);
  return undirected(vertices, e);
}

FusionGraph permuted(const FusionGraph& g, const std::vector<Index>& perm) {
  FusionGraph h = g;
  for (Index i = 0; i < g.size(); ++i) {
    h.labels[perm[i]] = g.labels[i];
    for (Index j = 0; j < g.size(); ++j) h.adjacency[perm[i]][perm[j]] = g.adjacency[i][j];
  }
  h.base = perm[g.base];
  h.generator = perm[g.generator];
  return h;
}

GradedFusionRing near_group_extension(std::size_t p) {
  const auto mod = near_group_bimodule(p);
  auto s = search_extensions(mod.left_ring(), mod);
  return s.rings.at(0);
}

}  // namespace

TEST(Graphs, PathSupertransitivity) {
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(supertransitivity(path(n + 1)), n) << n;
}

TEST(Graphs, SupertransitivityIsRelabelingInvariant) {
  std::mt19937 rng(7);
  const std::vector<FusionGraph> graphs{
      path(6), undirected(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}),
      undirected(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), undirected(3, {{0, 1}, {1, 1}, {1, 2}}),
      fusion_graph(near_group_extension(3), 5)};
  for (const auto& g : graphs) {
    std::vector<Index> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 10; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(supertransitivity(permuted(g, perm)), supertransitivity(g));
    }
  }
}

TEST(Graphs, RingExamples) {
  const auto fib = fusion_graph(fibonacci(), 1);
  EXPECT_EQ(supertransitivity(fib), 1u);
  EXPECT_EQ(fib.adjacency[1][1], 1);
  EXPECT_EQ(spoke_profile(fib).shape, SpokeShape::other);

  const auto z5 = fusion_graph(cyclic_group_ring(5), 1);
  EXPECT_FALSE(z5.self_dual);
  for (Index j = 0; j < 5; ++j)
    for (Index k = 0; k < 5; ++k) EXPECT_EQ(z5.adjacency[j][k], k == (j + 1) % 5 ? 1 : 0);
  EXPECT_EQ(spoke_profile(z5).shape, SpokeShape::other);

  auto multi = path(4);
  multi.adjacency[1][2] = multi.adjacency[2][1] = 2;
  EXPECT_EQ(supertransitivity(multi), 1u);
}

TEST(Graphs, SpokeProfiles) {
  const auto spoke = undirected(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}, {2, 7}});
  const auto prof = spoke_profile(spoke);
  EXPECT_EQ(prof.shape, SpokeShape::spoke);
  EXPECT_EQ(*prof.hub, 2u);
  EXPECT_EQ(prof.lengths, (std::vector<std::size_t>{2, 2, 2, 1}));
  EXPECT_EQ(spoke_profile(path(4)).shape, SpokeShape::path);
  EXPECT_TRUE(spoke_profile(path(4)).lengths.empty());
  EXPECT_EQ(spoke_profile(undirected(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})).shape,
            SpokeShape::other);
}

TEST(Graphs, NearGroupExtensionGraph) {
  for (std::size_t p = 2; p <= 5; ++p) {
    const auto g = near_group_extension(p);
    const Index b = g.full.index_of("b");
    const auto graph = fusion_graph(g, b);
    if (g.full.dual(b) != b) continue;
    const auto prof = spoke_profile(graph);
    ASSERT_EQ(prof.shape, SpokeShape::spoke) << p;
    EXPECT_EQ(g.full.label(*prof.hub), "X");
    std::vector<std::size_t> expect(p, 2);
    expect.push_back(1);
    EXPECT_EQ(prof.lengths, expect);
    EXPECT_EQ((graph.size() - 2) / 2, p);
    EXPECT_EQ(supertransitivity(graph), 2u);
  }
}

TEST(Graphs, OddGeneratorsAreBipartite) {
  for (const char* key : {"near-group-bimodule:3", "regular:cyclic:3", "regular:ising"}) {
    const auto mod = catalog_module(key);
    for (const auto& g : search_extensions(mod.left_ring(), mod).rings)
      for (Index gen = g.even_rank(); gen < g.full.rank(); ++gen) {
        const auto graph = fusion_graph(g, gen);
        for (Index j = 0; j < graph.size(); ++j)
          for (Index k = 0; k < graph.size(); ++k)
            if (graph.adjacency[j][k] != 0) EXPECT_NE((*graph.degree)[j], (*graph.degree)[k]);
      }
  }
}

TEST(Graphs, DisconnectedGraphIsAnError) {
  const auto g = undirected(3, {{0, 1}});
  EXPECT_FALSE(connected(g));
  EXPECT_THROW(supertransitivity(g), std::invalid_argument);
}

TEST(Dot, SingleVertex) {
  const auto g = undirected(1, {});
  EXPECT_EQ(emit_dot(g), "graph \"fusion_v0\" {\n  n0 [label=\"v0\", shape=doublecircle];\n}\n");
}

TEST(Dot, Fibonacci) {
  EXPECT_EQ(emit_dot(fusion_graph(fibonacci(), 1)),
            "graph \"fusion_tau\" {\n"
            "  n0 [label=\"1\", shape=doublecircle];\n"
            "  n1 [label=\"tau\"];\n"
            "  n0 -- n1;\n"
            "  n1 -- n1;\n"
            "}\n");
}

TEST(Dot, MultiplicityBecomesParallelEdges) {
  const auto dot = emit_dot(fusion_graph(near_group_ring(2), 2));
  std::size_t loops = 0;
  for (std::size_t pos = 0; (pos = dot.find("n2 -- n2;", pos)) != std::string::npos; ++pos) ++loops;
  EXPECT_EQ(loops, 2u);
  EXPECT_EQ(dot.find('\r'), std::string::npos);
}

TEST(Dot, DirectedForNonSelfDualGenerator) {
  const auto dot = emit_dot(fusion_graph(cyclic_group_ring(3), 1));
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("n2 -> n0;"), std::string::npos);
}

// Every edge of the extension's DOT document is an adjacency entry and back.
TEST(Dot, NearGroupExtensionMatchesAdjacency) {
  const auto g = near_group_extension(3);
  const auto graph = fusion_graph(g, g.full.index_of("b"));
  const auto dot = emit_dot(graph);
  EXPECT_EQ(dot, emit_dot(graph));
  std::size_t nodes = 0, edges = 0;
  std::vector<std::vector<Integer>> seen(graph.size(), std::vector<Integer>(graph.size()));
  std::istringstream in(dot);
  for (std::string line; std::getline(in, line);) {
    unsigned a = 0, b = 0;
    if (std::sscanf(line.c_str(), "  n%u -- n%u;", &a, &b) == 2) {
      ++edges;
      seen[a][b] += 1;
    } else if (line.find("[label=") != std::string::npos) {
      ++nodes;
    }
  }
  EXPECT_EQ(nodes, 8u);
  EXPECT_EQ(edges, 7u);
  for (Index j = 0; j < graph.size(); ++j)
    for (Index k = j; k < graph.size(); ++k) EXPECT_EQ(seen[j][k], graph.adjacency[j][k]);
  EXPECT_NE(dot.find("{ rank=same; n0; n1; n2; n3; }"), std::string::npos);
  EXPECT_NE(dot.find("{ rank=same; n4; n5; n6; n7; }"), std::string::npos);
}
