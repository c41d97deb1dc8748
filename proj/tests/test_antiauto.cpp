#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nbrecon/nbrecon.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

namespace nbrecon {
namespace {

using testing::fixture;
using testing::perm;

const Permutation kAntipodal = perm({3, 4, 5, 0, 1, 2});
const Permutation kQuarterTurn = perm({3, 0, 1, 2});

TEST(IsAntiAutomorphism, Examples) {
  EXPECT_TRUE(is_anti_automorphism(fixture("c6"), kAntipodal));
  EXPECT_TRUE(is_anti_automorphism(fixture("sql"), kQuarterTurn));
  EXPECT_FALSE(is_anti_automorphism(fixture("c6"), perm({1, 0, 2, 3, 4, 5})));
  EXPECT_THROW(is_anti_automorphism(fixture("c6"), kQuarterTurn), UsageError);
}

TEST(PermutedDigraph, SymmetricExactlyForAntiAutomorphisms) {
  const Graph c6 = fixture("c6");
  const Digraph bad = permuted_digraph(c6, perm({1, 0, 2, 3, 4, 5}));
  EXPECT_FALSE(bad.is_symmetric());
  const auto [u, v] = bad.first_asymmetric_arc();
  EXPECT_TRUE(bad.has_arc(u, v));
  EXPECT_FALSE(bad.has_arc(v, u));
  const Digraph good = permuted_digraph(c6, kAntipodal);
  EXPECT_TRUE(good.is_symmetric());
  EXPECT_EQ(good.to_graph(), fixture("2k3"));
  EXPECT_EQ(permuted_digraph(c6, Permutation::identity(6)).to_graph(), c6);
  EXPECT_THROW(permuted_digraph(c6, Permutation::identity(5)), UsageError);
}

TEST(ApplyAnti, NamedFixtures) {
  EXPECT_EQ(apply_anti(fixture("c6"), kAntipodal), fixture("2k3"));
  const Graph sqla = apply_anti(fixture("sql"), kQuarterTurn);
  EXPECT_EQ(sqla, fixture("sql_alpha"));
  EXPECT_EQ(sqla.loops(), 0b1111U);
  EXPECT_THROW(apply_anti(fixture("c6"), perm({1, 0, 2, 3, 4, 5})), InvalidAntiError);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 10, true, 0.4, rng);
    EXPECT_EQ(apply_anti(g, Permutation::identity(g.order())), g);
  }
}

TEST(ApplyAnti, MatchesLiteralEdgeDefinitionAndKeepsMultiset) {
  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n, true)) {
      for (const Permutation& a : testing::brute_ant(g)) {
        const Graph h = apply_anti(g, a);
        ASSERT_EQ(h, testing::brute_twist(g, a));
        ASSERT_EQ(neighborhood_multiset(h), neighborhood_multiset(g));
      }
    }
  }
}

TEST(EnumerateAnt, PinnedCounts) {
  EXPECT_EQ(enumerate_ant(fixture("lp")), std::vector<Permutation>{Permutation::identity(2)});
  EXPECT_EQ(enumerate_ant(Graph(3)).size(), 6U);
  EXPECT_EQ(enumerate_ant(fixture("c6")).size(), 22U);
  EXPECT_EQ(enumerate_ant(Graph(0)).size(), 1U);
  EXPECT_THROW(enumerate_ant(Graph(9)), CapacityError);
}

TEST(EnumerateAnt, MatchesBruteForceExhaustively) {
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n, true)) ASSERT_EQ(enumerate_ant(g), testing::brute_ant(g));
  }
}

TEST(EnumerateAnt, ClosedUnderPowersOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = testing::random_graph(3 + trial % 5, trial % 2 == 0, 0.5, rng);
    const auto ant = enumerate_ant(g);
    ASSERT_EQ(ant, testing::brute_ant(g));
    const std::set<Permutation> set(ant.begin(), ant.end());
    ASSERT_TRUE(set.contains(Permutation::identity(g.order())));
    for (const Permutation& a : ant) {
      for (long long k = -3; k <= 3; ++k) ASSERT_TRUE(set.contains(a.pow(k)));
    }
  }
}

TEST(TwoFold, MembershipExamples) {
  const Graph c6 = fixture("c6");
  EXPECT_TRUE(is_two_fold(c6, {Permutation::identity(6), Permutation::identity(6)}));
  for (const Permutation& a : enumerate_ant(c6)) EXPECT_TRUE(is_two_fold(c6, {a, a.inverse()}));
  for (const Permutation& s : automorphisms(c6)) EXPECT_TRUE(is_two_fold(c6, {s, s}));
  EXPECT_THROW(is_two_fold(c6, {Permutation::identity(5), Permutation::identity(6)}), UsageError);
}

TEST(TwoFold, PinnedEnumerations) {
  EXPECT_EQ(enumerate_aut_tf(Graph(2)).size(), 4U);
  const Permutation id = Permutation::identity(2);
  const Permutation swap = perm({1, 0});
  EXPECT_EQ(enumerate_aut_tf(fixture("k2")), (std::vector<TwoFoldPair>{{id, id}, {swap, swap}}));
  EXPECT_EQ(enumerate_aut_tf(fixture("c6")).size(), 72U);
  EXPECT_THROW(enumerate_aut_tf(Graph(7)), CapacityError);
}

TEST(TwoFold, MatchesBruteForceAndFormsAGroup) {
  for (int n = 0; n <= 3; ++n) {
    const auto perms = testing::all_permutations(n);
    for (const Graph& g : enumerate_labeled_graphs(n, true)) {
      std::vector<TwoFoldPair> brute;
      for (const Permutation& l : perms) {
        for (const Permutation& m : perms) {
          bool ok = true;
          for (int x = 0; x < n && ok; ++x) {
            for (int y = 0; y < n && ok; ++y) ok = g.adjacent(x, y) == g.adjacent(l(x), m(y));
          }
          if (ok) brute.push_back({l, m});
        }
      }
      const auto tf = enumerate_aut_tf(g);
      ASSERT_EQ(tf, brute);
      const std::set<TwoFoldPair> group(tf.begin(), tf.end());
      for (const TwoFoldPair& p : tf) {
        ASSERT_TRUE(group.contains(p.inverse()));
        for (const TwoFoldPair& q : tf) ASSERT_TRUE(group.contains(compose(p, q)));
      }
    }
  }
}

TEST(Action, Examples) {
  const Graph c6 = fixture("c6");
  const Permutation id = Permutation::identity(6);
  for (const Permutation& a : enumerate_ant(c6)) {
    EXPECT_EQ(act(c6, {id, id}, a), a);
    EXPECT_EQ(act(c6, {a, a.inverse()}, a), a.pow(3));
  }
  EXPECT_EQ(act(c6, {kAntipodal, kAntipodal}, kAntipodal), kAntipodal);
  EXPECT_THROW(act(c6, {id, id}, perm({1, 0, 2, 3, 4, 5})), InvalidActionError);
  EXPECT_THROW(act(c6, {kAntipodal, id}, kAntipodal), InvalidActionError);
}

TEST(AntOrbits, C6HasFourOrbits) {
  const Graph c6 = fixture("c6");
  const AntOrbitPartition p = ant_orbits(c6);
  ASSERT_EQ(p.ant.size(), 22U);
  ASSERT_EQ(p.orbit_count(), 4U);
  std::vector<std::size_t> sizes;
  for (const auto& o : p.orbits) sizes.push_back(o.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{6, 9, 6, 1}));
  // orbit order follows the least member; the singleton is the antipodal map
  EXPECT_EQ(p.ant[p.representatives[3]], kAntipodal);
  EXPECT_EQ(p.ant[p.representatives[1]], perm({1, 0, 5, 4, 3, 2}));
  EXPECT_TRUE(is_isomorphic(apply_anti(c6, p.ant[p.representatives[p.identity_orbit()]]), c6));

  std::set<std::string> classes;
  for (std::size_t rep : p.representatives) classes.insert(canonical_form(apply_anti(c6, p.ant[rep])).key());
  EXPECT_EQ(classes.size(), 4U);
  EXPECT_TRUE(classes.contains(canonical_form(fixture("2k3")).key()));
}

TEST(AntOrbits, SmallExamples) {
  EXPECT_EQ(ant_orbits(fixture("lp")).orbit_count(), 1U);
  EXPECT_EQ(ant_orbits(Graph(4)).orbit_count(), 1U);
  EXPECT_EQ(ant_orbits(Graph(0)).orbit_count(), 1U);
}

TEST(AntOrbits, PartitionInvariants) {
  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : enumerate_labeled_graphs(n, true)) {
      const AntOrbitPartition p = ant_orbits(g);
      std::vector<std::size_t> seen;
      for (std::size_t o = 0; o < p.orbits.size(); ++o) {
        ASSERT_EQ(p.orbits[o].front(), p.representatives[o]);
        for (std::size_t i : p.orbits[o]) {
          ASSERT_EQ(p.orbit_of[i], o);
          seen.push_back(i);
        }
      }
      std::sort(seen.begin(), seen.end());
      ASSERT_EQ(seen.size(), p.ant.size());
      ASSERT_TRUE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
  }
}

}  // namespace
}  // namespace nbrecon
