#include <gtest/gtest.h>

#include <cmath>

#include "gsu/generators.hpp"

using namespace gsu;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::Io;
}

bool is_regular(const Graph& g, std::size_t c) {
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (g.degree(v) != c) return false;
  return true;
}

}  // namespace

TEST(CaryTree, ShapeAndNumbering) {
  Graph g = c_ary_tree(3, 2);
  EXPECT_EQ(g.node_count(), 13u);
  EXPECT_EQ(g.edge_count(), 12u);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(g.degree(0), 3u);
  for (NodeId v = 1; v <= 3; ++v) EXPECT_EQ(g.degree(v), 4u);
  for (NodeId v = 4; v < 13; ++v) EXPECT_EQ(g.degree(v), 1u);
  for (NodeId v = 0; v < 4; ++v)
    for (NodeId j = 1; j <= 3; ++j) EXPECT_TRUE(g.has_edge(v, 3 * v + j));
  EXPECT_EQ(diameter(g), 4u);
  EXPECT_EQ(half_diameter(g), 2u);
}

TEST(CaryTree, NodeCountAndLimits) {
  EXPECT_EQ(cary_node_count(2, 3), 15u);
  EXPECT_EQ(cary_node_count(10, 4), 11111u);
  EXPECT_FALSE(cary_node_count(64, 6).has_value());
  EXPECT_EQ(code_of([] { c_ary_tree(64, 6); }), Errc::TooLarge);
  EXPECT_EQ(code_of([] { c_ary_tree(1, 3); }), Errc::InvalidParams);
  EXPECT_EQ(code_of([] { c_ary_tree(2, 0); }), Errc::InvalidParams);
}

TEST(RandomRegular, RegularSimpleConnected) {
  Rng rng(7);
  for (auto [n, c] : std::vector<std::pair<std::size_t, std::size_t>>{{10, 3}, {50, 4}, {200, 6}, {30, 29}}) {
    Graph g = random_regular(n, c, rng);
    EXPECT_EQ(g.node_count(), n);
    EXPECT_EQ(g.edge_count(), n * c / 2);
    EXPECT_TRUE(is_regular(g, c));
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(RandomRegular, SameSeedSameGraph) {
  Rng a(99), b(99);
  EXPECT_EQ(random_regular(60, 6, a), random_regular(60, 6, b));
}

TEST(RandomRegular, RejectsImpossibleParameters) {
  Rng rng(1);
  EXPECT_EQ(code_of([&] { random_regular(5, 3, rng); }), Errc::InvalidParams);
  EXPECT_EQ(code_of([&] { random_regular(4, 4, rng); }), Errc::InvalidParams);
  EXPECT_EQ(code_of([&] { random_regular(4, 0, rng); }), Errc::InvalidParams);
  // c = 1 gives a perfect matching, never connected beyond n = 2.
  EXPECT_EQ(code_of([&] { random_regular(6, 1, rng, 5); }), Errc::GenerationFailed);
}

TEST(Lattice, OpenGrid) {
  Graph g = lattice({3, 4}, false);
  EXPECT_EQ(g.node_count(), 12u);
  EXPECT_EQ(g.edge_count(), 3u * 3 + 2u * 4);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(0, 4));
  EXPECT_FALSE(g.has_edge(3, 4));
  EXPECT_EQ(diameter(g), 2u + 3u);
}

TEST(Lattice, PeriodicIsRegular) {
  Graph g = lattice({5, 4, 3}, true);
  EXPECT_EQ(g.node_count(), 60u);
  EXPECT_TRUE(is_regular(g, 6));
  EXPECT_EQ(diameter(g), 2u + 2u + 1u);
  EXPECT_EQ(code_of([] { lattice({2, 5}, true); }), Errc::InvalidParams);
  EXPECT_EQ(code_of([] { lattice({1}, false); }), Errc::InvalidParams);
}

TEST(WattsStrogatz, NoRewiringIsRingLattice) {
  Rng rng(3);
  Graph g = watts_strogatz(20, 4, 0.0, rng);
  EXPECT_TRUE(is_regular(g, 4));
  for (NodeId v = 0; v < 20; ++v) {
    EXPECT_TRUE(g.has_edge(v, (v + 1) % 20));
    EXPECT_TRUE(g.has_edge(v, (v + 2) % 20));
  }
}

TEST(WattsStrogatz, RewiringKeepsEdgeCount) {
  Rng rng(4);
  for (double beta : {0.1, 0.5, 1.0}) {
    Graph g = watts_strogatz(100, 6, beta, rng);
    EXPECT_EQ(g.edge_count(), 300u);
    EXPECT_TRUE(is_connected(g));
  }
  EXPECT_EQ(code_of([&] { watts_strogatz(10, 3, 0.1, rng); }), Errc::InvalidParams);
  EXPECT_EQ(code_of([&] { watts_strogatz(10, 10, 0.1, rng); }), Errc::InvalidParams);
}

TEST(ErdosRenyi, ExtremesAndEdgeDensity) {
  Rng rng(5);
  EXPECT_EQ(erdos_renyi(30, 0.0, rng).edge_count(), 0u);
  EXPECT_EQ(erdos_renyi(30, 1.0, rng).edge_count(), 435u);
  const std::size_t n = 400;
  const double q = 0.05, pairs = n * (n - 1) / 2.0;
  Graph g = erdos_renyi(n, q, rng);
  EXPECT_NEAR(static_cast<double>(g.edge_count()), pairs * q, 5 * std::sqrt(pairs * q * (1 - q)));
}

TEST(BarabasiAlbert, EdgeCountAndConnectivity) {
  Rng rng(6);
  Graph g = barabasi_albert(500, 3, rng);
  EXPECT_EQ(g.edge_count(), 3u * (500 - 3));
  EXPECT_TRUE(is_connected(g));
  // Hubs emerge.
  EXPECT_GT(degree_stats(g).max, 20u);
  EXPECT_EQ(code_of([&] { barabasi_albert(3, 3, rng); }), Errc::InvalidParams);
}

TEST(DirectedScaleFree, GrowsToRequestedSize) {
  Rng rng(8);
  Graph g = directed_scale_free(300, ScaleFreeParams{}, rng);
  EXPECT_EQ(g.node_count(), 300u);
  for (NodeId v = 0; v < g.node_count(); ++v) EXPECT_FALSE(g.has_edge(v, v));
  EXPECT_EQ(code_of([&] { directed_scale_free(10, {0.5, 0.5, 0.5, 0.2, 0}, rng); }), Errc::InvalidParams);
  EXPECT_EQ(code_of([&] { directed_scale_free(10, {0.0, 1.0, 0.0, 0.2, 0}, rng); }), Errc::InvalidParams);
}

TEST(Generate, GeneratorSpecIsReproducible) {
  GeneratorSpec spec{RegularParams{40, 4}, 1234};
  EXPECT_EQ(spec.family(), Family::RandomRegular);
  EXPECT_EQ(generate(spec), generate(spec));
  GeneratorSpec tree{CaryTreeParams{2, 3}, 0};
  EXPECT_EQ(generate(tree), c_ary_tree(2, 3));
}

TEST(Generate, FamilyNamesRoundTrip) {
  for (Family f : {Family::CaryTree, Family::RandomRegular, Family::Lattice, Family::WattsStrogatz,
                   Family::ErdosRenyi, Family::BarabasiAlbert, Family::DirectedScaleFree})
    EXPECT_EQ(parse_family(to_string(f)), f);
  EXPECT_EQ(code_of([] { parse_family("hypercube"); }), Errc::InvalidParams);
}

TEST(GeometricSizes, StrictlyIncreasing) {
  auto s = detail::geometric_sizes(3, 10);
  ASSERT_EQ(s.size(), 10u);
  EXPECT_EQ(s.front(), 3u);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_GT(s[i], s[i - 1]);
}

TEST(FindGraphWith, HitsTargets) {
  Rng rng(10);
  struct Case {
    Family f;
    double c;
    std::size_t h;
  };
  for (Case k : {Case{Family::CaryTree, 3, 2}, Case{Family::Lattice, 4, 3}, Case{Family::RandomRegular, 6, 3},
                 Case{Family::WattsStrogatz, 4, 4}, Case{Family::ErdosRenyi, 4, 3}}) {
    Graph g = find_graph_with(k.f, k.c, k.h, 0.5, 200, rng);
    EXPECT_EQ(half_diameter(g), k.h) << to_string(k.f);
    // For trees c is the child count; elsewhere it is the mean degree.
    if (k.f == Family::CaryTree)
      EXPECT_EQ(g.degree(0), k.c);
    else
      EXPECT_NEAR(degree_stats(g).mean, k.c, 0.5) << to_string(k.f);
  }
}

TEST(FindGraphWith, ExhaustedBudgetIsNotFound) {
  Rng rng(11);
  EXPECT_EQ(code_of([&] { find_graph_with(Family::Lattice, 3, 2, 0.5, 50, rng); }), Errc::NotFound);
  EXPECT_EQ(code_of([&] { find_graph_with(Family::RandomRegular, 6, 40, 0.5, 3, rng); }), Errc::NotFound);
  EXPECT_EQ(code_of([&] { find_graph_with(Family::CaryTree, 2, 3, 0.5, 0, rng); }), Errc::InvalidParams);
}
