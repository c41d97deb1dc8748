#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "nbrecon/nbrecon.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

namespace nbrecon {
namespace {

using testing::cycle;
using testing::fixture;
using testing::perm;

TEST(CanonicalForm, LoopMirrorAndRelabelings) {
  const Graph lp = fixture("lp");
  const Graph mirror(2, {{0, 1}, {1, 1}});
  EXPECT_EQ(canonical_form(lp), canonical_form(mirror));
  EXPECT_NE(canonical_form(lp), canonical_form(Graph(2, {{0, 1}})));
  EXPECT_EQ(canonical_form(Graph(0)).hex(), "00");

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 14, true, 0.35, rng);
    const Graph h = relabel(g, testing::random_permutation(g.order(), rng));
    const Certificate cg = canonical_form(g);
    ASSERT_EQ(cg, canonical_form(h));
    EXPECT_EQ(relabel(g, cg.labeling), relabel(h, canonical_form(h).labeling));
  }
}

TEST(CanonicalForm, ByteLayout) {
  const Certificate c = canonical_form(fixture("q3"));
  EXPECT_EQ(c.bytes.size(), 1U + 8U);
  EXPECT_EQ(c.bytes[0], 8);
  EXPECT_EQ(canonical_form(Graph(9)).bytes.size(), 1U + 9U * 2U);
}

// Classes from the canonical form must coincide with classes found by trying
// every permutation, over every graph with loops on up to 5 vertices.
TEST(CanonicalForm, AgreesWithBruteForceClasses) {
  for (int n = 0; n <= 5; ++n) {
    const auto perms = testing::all_permutations(n);
    std::vector<std::uint64_t> cls(labeled_graph_count(n, true), UINT64_MAX);
    std::uint64_t next_class = 0;
    for (std::uint64_t i = 0; i < cls.size(); ++i) {
      if (cls[i] != UINT64_MAX) continue;
      const Graph g = labeled_graph_at(n, true, i);
      for (const Permutation& p : perms) cls[labeled_graph_index(relabel(g, p), true)] = next_class;
      ++next_class;
    }
    std::map<std::string, std::uint64_t> by_cert;
    for (std::uint64_t i = 0; i < cls.size(); ++i) {
      const auto [it, fresh] = by_cert.emplace(canonical_form(labeled_graph_at(n, true, i)).key(), cls[i]);
      ASSERT_EQ(it->second, cls[i]) << "n=" << n << " index " << i;
      (void)fresh;
    }
    EXPECT_EQ(by_cert.size(), next_class) << "n=" << n;
  }
}

// graphs with loops counted up to isomorphism
TEST(CanonicalForm, UnlabeledCountsWithLoops) {
  const std::vector<std::size_t> expected{1, 2, 6, 20, 90, 544};
  for (int n = 0; n <= 5; ++n) {
    std::set<std::uint64_t> classes;
    for (const Graph& g : enumerate_labeled_graphs(n, true)) classes.insert(packed_canonical_form(g));
    EXPECT_EQ(classes.size(), expected[static_cast<std::size_t>(n)]) << "n=" << n;
  }
  EXPECT_THROW(packed_canonical_form(Graph(9)), CapacityError);
}

TEST(IsIsomorphic, Examples) {
  EXPECT_FALSE(is_isomorphic(fixture("c6"), fixture("2k3")));
  EXPECT_FALSE(is_isomorphic(fixture("sql"), fixture("sql_alpha")));
  EXPECT_FALSE(is_isomorphic(Graph(3), Graph(4)));
  const Graph asym = fixture("asym7");
  EXPECT_TRUE(is_isomorphic(asym, asym));
}

TEST(FindIsomorphism, WitnessVerifies) {
  const Graph c6 = fixture("c6");
  const Graph mirrored = relabel(c6, perm({5, 4, 3, 2, 1, 0}));
  const auto phi = find_isomorphism(c6, mirrored);
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(testing::brute_is_isomorphism(c6, mirrored, *phi));
  EXPECT_FALSE(find_isomorphism(c6, fixture("2k3")).has_value());
  EXPECT_FALSE(find_isomorphism(Graph(2, {{0, 1}}), Graph(2, {{0, 0}, {1, 1}})).has_value());
}

TEST(FindIsomorphism, WitnessIffIsomorphicOnRandomPairs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 7;
    const Graph g = testing::random_graph(n, true, 0.4, rng);
    const Graph h = trial % 2 ? relabel(g, testing::random_permutation(n, rng)) : testing::random_graph(n, true, 0.4, rng);
    const auto phi = find_isomorphism(g, h);
    ASSERT_EQ(phi.has_value(), is_isomorphic(g, h));
    ASSERT_EQ(phi.has_value(), testing::brute_isomorphic(g, h));
    if (phi) {
      ASSERT_TRUE(testing::brute_is_isomorphism(g, h, *phi));
    }
  }
}

TEST(Automorphisms, ExamplesAndGroupAxioms) {
  EXPECT_EQ(automorphisms(fixture("c6")).size(), 12U);
  EXPECT_EQ(automorphisms(fixture("k2")).size(), 2U);
  EXPECT_EQ(automorphisms(fixture("lp")).size(), 1U);
  EXPECT_EQ(automorphisms(fixture("asym7")).size(), 1U);
  EXPECT_EQ(automorphisms(fixture("q3")).size(), 48U);
  EXPECT_THROW(automorphisms(Graph(9)), CapacityError);
  EXPECT_EQ(automorphisms(Graph(9), Budget{true}).size(), 362880U);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 7, true, 0.5, rng);
    const auto auts = automorphisms(g);
    ASSERT_EQ(auts, testing::brute_automorphisms(g));
    const std::set<Permutation> group(auts.begin(), auts.end());
    EXPECT_TRUE(group.contains(Permutation::identity(g.order())));
    for (const Permutation& a : auts) {
      EXPECT_TRUE(group.contains(a.inverse()));
      for (const Permutation& b : auts) EXPECT_TRUE(group.contains(compose(a, b)));
    }
  }
}

TEST(Involutions, Examples) {
  const auto c6 = find_involution(fixture("c6"));
  ASSERT_TRUE(c6.has_value());
  EXPECT_TRUE(compose(*c6, *c6).is_identity());
  EXPECT_FALSE(c6->is_identity());
  EXPECT_FALSE(has_involution(fixture("lp")));
  EXPECT_FALSE(has_involution(fixture("asym7")));
  EXPECT_FALSE(has_involution(Graph(1)));
  EXPECT_TRUE(has_involution(Graph(2)));
}

TEST(Involutions, MatchOrderScanOfAutomorphisms) {
  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n, true)) {
      bool order_two = false;
      for (const Permutation& a : automorphisms(g)) order_two = order_two || a.order() == 2;
      ASSERT_EQ(has_involution(g), order_two);
    }
  }
}

}  // namespace
}  // namespace nbrecon
