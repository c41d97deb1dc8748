#include <gtest/gtest.h>

#include <random>

#include "nbrecon/nbrecon.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

namespace nbrecon {
namespace {

using testing::cycle;
using testing::fixture;
using testing::path;

Graph hamming_cube(int dims) {
  Graph g(1 << dims);
  for (int u = 0; u < (1 << dims); ++u) {
    for (int b = 0; b < dims; ++b) {
      if (u < (u ^ (1 << b))) g.add_edge(u, u ^ (1 << b));
    }
  }
  return g;
}

TEST(DirectProduct, EdgesFollowTheDefinition) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 5, true, 0.5, rng);
    const Graph h = testing::random_graph(1 + trial % 4, true, 0.5, rng);
    const Graph p = direct_product(g, h);
    ASSERT_EQ(p.order(), g.order() * h.order());
    for (int x = 0; x < g.order(); ++x) {
      for (int xp = 0; xp < h.order(); ++xp) {
        for (int y = 0; y < g.order(); ++y) {
          for (int yp = 0; yp < h.order(); ++yp) {
            ASSERT_EQ(p.adjacent(product_vertex(x, xp, h.order()), product_vertex(y, yp, h.order())),
                      g.adjacent(x, y) && h.adjacent(xp, yp));
          }
        }
      }
    }
  }
}

TEST(DirectProduct, Examples) {
  const Graph k2 = fixture("k2");
  EXPECT_TRUE(is_isomorphic(direct_product(fixture("c6"), k2), disjoint_union(cycle(6), cycle(6))));
  EXPECT_EQ(fixture("q3"), hamming_cube(3));
  EXPECT_TRUE(is_isomorphic(direct_product(fixture("sql"), k2), fixture("q3")));
  EXPECT_TRUE(is_isomorphic(direct_product(fixture("sql_alpha"), k2), fixture("q3")));
  EXPECT_EQ(direct_product(cycle(5), Graph(3)), Graph(15));
  const Graph lp = fixture("lp");
  EXPECT_TRUE(direct_product(lp, lp).has_loop(0));
  EXPECT_EQ(direct_product(lp, lp).loops(), 1U);
  EXPECT_THROW(direct_product(Graph(9), Graph(8)), CapacityError);
}

TEST(DirectProduct, CommutativeAndAssociativeUpToIsomorphism) {
  const std::vector<Graph> graphs{fixture("c6"), fixture("sql"), fixture("lp"), fixture("k2"), path(3),
                                  nbrecon::complete_graph(3)};
  for (const Graph& g : graphs) {
    for (const Graph& h : graphs) {
      if (g.order() * h.order() > 64) continue;
      EXPECT_TRUE(is_isomorphic(direct_product(g, h), direct_product(h, g)));
      for (const Graph& k : graphs) {
        if (g.order() * h.order() * k.order() > 64) continue;
        EXPECT_TRUE(is_isomorphic(direct_product(direct_product(g, h), k), direct_product(g, direct_product(h, k))));
      }
    }
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(components(fixture("2k3")), (std::vector<VertexSet>{0b010101, 0b101010}));
  EXPECT_EQ(components(cycle(6)).size(), 1U);
  EXPECT_EQ(components(Graph(3)).size(), 3U);
  EXPECT_EQ(components(Graph(2, {{0, 0}, {1, 1}})).size(), 2U);
  EXPECT_TRUE(components(Graph(0)).empty());
  EXPECT_TRUE(is_connected(fixture("q3")));
}

TEST(Bipartition, Examples) {
  const Bipartition c6 = bipartition(cycle(6));
  ASSERT_TRUE(c6.bipartite);
  ASSERT_EQ(c6.parts.size(), 1U);
  EXPECT_EQ(c6.parts[0].x, 0b010101U);
  EXPECT_EQ(c6.parts[0].y, 0b101010U);

  const Bipartition k3 = bipartition(nbrecon::complete_graph(3));
  EXPECT_FALSE(k3.bipartite);
  EXPECT_EQ(k3.odd_cycle.size(), 3U);

  const Bipartition lp = bipartition(fixture("lp"));
  EXPECT_FALSE(lp.bipartite);
  EXPECT_EQ(lp.odd_cycle, std::vector<int>{0});
}

TEST(Bipartition, WitnessesAreValid) {
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n, true)) {
      const Bipartition b = bipartition(g);
      if (b.bipartite) {
        VertexSet covered = 0;
        for (const auto& part : b.parts) {
          ASSERT_EQ(part.x | part.y, part.vertices);
          ASSERT_EQ(part.x & part.y, 0U);
          ASSERT_TRUE(contains(part.x, lowest(part.vertices)));
          covered |= part.vertices;
        }
        ASSERT_EQ(covered, g.vertices());
        for (auto [u, v] : g.edges()) ASSERT_NE(contains(b.x(), u), contains(b.x(), v));
      } else {
        const auto& w = b.odd_cycle;
        ASSERT_EQ(w.size() % 2, 1U);
        for (std::size_t i = 0; i < w.size(); ++i) ASSERT_TRUE(g.adjacent(w[i], w[(i + 1) % w.size()]));
      }
    }
  }
}

// connected G, H: G x H is connected iff one factor has an odd cycle, and
// two bipartite factors give exactly two components
TEST(Weichsel, ConnectedFactors) {
  std::vector<Graph> connected;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n, true)) {
      if (is_connected(g) && g.edge_count() > 0) connected.push_back(g);
    }
  }
  for (const Graph& g : connected) {
    for (const Graph& h : connected) {
      const std::size_t parts = components(direct_product(g, h)).size();
      if (is_bipartite(g) && is_bipartite(h)) {
        ASSERT_EQ(parts, 2U);
      } else {
        ASSERT_EQ(parts, 1U);
      }
    }
  }
}

TEST(Weichsel, BipartiteTimesK2IsTwoCopies) {
  const Graph k2 = fixture("k2");
  for (const std::string name : {"c6", "p_reconstruct", "q3", "asym7"}) {
    const Graph g = fixture(name);
    EXPECT_TRUE(is_isomorphic(direct_product(g, k2), disjoint_union(g, g))) << name;
  }
}

}  // namespace
}  // namespace nbrecon
