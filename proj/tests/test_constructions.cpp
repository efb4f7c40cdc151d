#include <gtest/gtest.h>

#include <numeric>

#include "forcing_lab/constructions.hpp"
#include "forcing_lab/families.hpp"
#include "forcing_lab/random.hpp"
#include "forcing_lab/solvers.hpp"
#include "oracles.hpp"

using namespace forcing_lab;

TEST(InDegreeOneCycles, Examples) {
  EXPECT_EQ(in_degree_one_cycles(cycle(5)), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}}));
  EXPECT_TRUE(in_degree_one_cycles(complete_without_loops(4)).empty());
  EXPECT_TRUE(in_degree_one_cycles(Digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 1}})).empty());
  EXPECT_TRUE(in_degree_one_cycles(Digraph(2, {{0, 0}, {0, 1}, {1, 0}})).empty());
  // A looped vertex of in-degree one is a cycle on its own.
  EXPECT_EQ(in_degree_one_cycles(Digraph(2, {{0, 0}, {0, 1}})), (std::vector<std::vector<Vertex>>{{0}}));
}

TEST(ConstructZfsLine, Examples) {
  const auto a = construct_zfs_line(complete_with_loops(3));
  EXPECT_EQ(a.set.size(), 6);
  EXPECT_TRUE(is_zero_forcing_set(a.host.graph, a.set));
  EXPECT_EQ(construct_zfs_line(complete_without_loops(3)).set.size(), 3);
  EXPECT_THROW(construct_zfs_line(cycle(4)), DomainError);
}

TEST(ConstructZfsLine, AvoidsInDegreeOneCycle) {
  // 0 <-> 1 is a cycle of in-degree-1 vertices.
  const Digraph h(4, {{0, 1}, {0, 3}, {1, 0}, {1, 3}, {2, 3}, {2, 2}, {3, 2}, {3, 3}});
  ASSERT_EQ(in_degree_one_cycles(h), (std::vector<std::vector<Vertex>>{{0, 1}}));
  EXPECT_EQ(degrees(h).min_in, 1);
  const auto w = construct_zfs_line(h);
  EXPECT_EQ(w.set.size(), h.arc_count() - h.order());
  EXPECT_TRUE(is_zero_forcing_set(w.host.graph, w.set));
}

TEST(ConstructZfsLine, RandomCorpusIsMinimum) {
  Rng rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    const int n = 3 + iter % 5;
    const Digraph g = random_digraph_min_degree(rng, n, 2, 1, iter % 2 == 0);
    const auto w = construct_zfs_line(g);
    EXPECT_EQ(w.set.size(), g.arc_count() - g.order());
    EXPECT_TRUE(is_zero_forcing_set(w.host.graph, w.set));
    if (iter % 4 == 0 && w.host.graph.order() <= 20) {
      EXPECT_EQ(oracle::brute_z(w.host.graph), g.arc_count() - g.order());
    }
  }
}

TEST(OneFactor, Examples) {
  const auto k3 = one_factor(complete_with_loops(3));
  ASSERT_EQ(k3.status, FactorStatus::found);
  EXPECT_TRUE(is_one_factor(complete_with_loops(3), *k3.factor));

  const auto c = one_factor(cycle(5));
  ASSERT_EQ(c.status, FactorStatus::found);
  EXPECT_EQ(c.factor->cycles().size(), 1u);
  EXPECT_FALSE(is_good_factor(cycle(5), *c.factor));
  EXPECT_EQ(one_factor(cycle(5), true).status, FactorStatus::none);

  EXPECT_EQ(one_factor(Digraph(3, {{0, 1}, {1, 2}})).status, FactorStatus::none);
}

TEST(OneFactor, GoodFactorExistsUnlessForcedBadCycle) {
  // Exhaustive oracle over all permutations f with (f(v), v) an arc.
  Rng rng(71);
  for (int iter = 0; iter < 150; ++iter) {
    const int n = 2 + iter % 6;
    const Digraph g = random_digraph(rng, n, 0.45, iter % 2 == 0);
    std::vector<Vertex> f(n);
    std::iota(f.begin(), f.end(), 0);
    bool any = false, any_good = false;
    do {
      OneFactor x{f};
      if (!is_one_factor(g, x)) continue;
      any = true;
      any_good = any_good || is_good_factor(g, x);
    } while (std::next_permutation(f.begin(), f.end()));
    const auto plain = one_factor(g);
    const auto good = one_factor(g, true);
    EXPECT_EQ(plain.status == FactorStatus::found, any);
    EXPECT_EQ(good.status == FactorStatus::found, any_good);
    if (good.factor) { EXPECT_TRUE(is_good_factor(g, *good.factor)); }
    if (any) { EXPECT_EQ(any_good, in_degree_one_cycles(g).empty()); }
  }
}

TEST(OneFactor, RegularAlwaysHasOne) {
  Rng rng(43);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 2 + iter % 7;
    const Digraph g = random_regular_digraph(rng, n, 1 + iter % std::min(n, 3));
    const auto r = one_factor(g);
    ASSERT_EQ(r.status, FactorStatus::found);
    EXPECT_TRUE(is_one_factor(g, *r.factor));
  }
}

TEST(CycleFactorization, Examples) {
  const auto k = cycle_factorization(complete_with_loops(3));
  EXPECT_EQ(k.size(), 3u);
  EXPECT_TRUE(is_cycle_factorization(complete_with_loops(3), k));
  EXPECT_EQ(cycle_factorization(cycle(6)).size(), 1u);
  const auto b = cycle_factorization(de_bruijn(2, 3));
  EXPECT_EQ(b.size(), 2u);
  EXPECT_TRUE(is_cycle_factorization(de_bruijn(2, 3), b));
  EXPECT_THROW(cycle_factorization(Digraph(3, {{0, 1}, {1, 2}})), DomainError);
}

TEST(CycleFactorization, RandomRegular) {
  Rng rng(47);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 3 + iter % 6;
    const bool loops = iter % 2 == 0;
    const int d = 1 + iter % std::min(loops ? n : n - 1, 4);
    const Digraph g = random_regular_digraph(rng, n, d, loops);
    const auto fs = cycle_factorization(g);
    EXPECT_EQ(static_cast<int>(fs.size()), d);
    EXPECT_TRUE(is_cycle_factorization(g, fs));
    std::vector<Arc> all;
    for (const auto& f : fs) {
      EXPECT_TRUE(is_one_factor(g, f));
      for (const auto& a : f.arcs()) all.push_back(a);
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, g.arcs());
  }
}

TEST(ConstructPdsL2, Examples) {
  const Digraph k4 = complete_without_loops(4);
  const auto f = one_factor(k4, true);
  ASSERT_EQ(f.status, FactorStatus::found);
  const auto w = construct_pds_L2(k4, *f.factor);
  EXPECT_EQ(w.set.size(), 8);
  EXPECT_TRUE(is_power_dominating_set(w.host.graph, w.set));

  const Digraph k3 = complete_with_loops(3);
  const auto w3 = construct_pds_L2(k3, OneFactor{{0, 1, 2}});
  EXPECT_EQ(w3.set.size(), 6);
  EXPECT_TRUE(is_power_dominating_set(w3.host.graph, w3.set));

  EXPECT_THROW(construct_pds_L2(cycle(3), OneFactor{{2, 0, 1}}), DomainError);
  EXPECT_THROW(construct_pds_L2(k3, OneFactor{{1, 1, 2}}), DomainError);
}

TEST(ConstructPdsL2, RandomCorpus) {
  Rng rng(53);
  int built = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const Digraph g = random_digraph_min_degree(rng, 3 + iter % 3, 2, 1, iter % 2 == 0);
    const auto f = one_factor(g, true);
    if (f.status != FactorStatus::found) continue;
    const auto w = construct_pds_L2(g, *f.factor);
    int expected = 0;
    for (Vertex v = 0; v < g.order(); ++v) expected += g.in_degree(v) - 1;
    EXPECT_EQ(w.set.size(), expected);
    EXPECT_TRUE(is_power_dominating_set(w.host.graph, w.set));
    ++built;
  }
  EXPECT_GT(built, 30);
}

TEST(ConstructPdsL2, MatchesLineZfsForRegular) {
  Rng rng(59);
  for (int iter = 0; iter < 20; ++iter) {
    const Digraph g = random_regular_digraph(rng, 3 + iter % 3, 2 + iter % 2);
    const auto f = one_factor(g, true);
    ASSERT_EQ(f.status, FactorStatus::found);
    EXPECT_EQ(construct_pds_L2(g, *f.factor).set.size(), construct_zfs_line(g).set.size());
  }
}

TEST(DisjointOutNeighbourhoods, Examples) {
  const auto k = find_disjoint_outneighborhood_set(complete_with_loops(3), 1);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->members(), std::vector<Vertex>{0});
  const auto b = find_disjoint_outneighborhood_set(de_bruijn(2, 2), 2);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->members(), (std::vector<Vertex>{0, 3}));
  EXPECT_FALSE(find_disjoint_outneighborhood_set(conjunction(complete_with_loops(2), cycle(2)), 2));
  EXPECT_THROW(find_disjoint_outneighborhood_set(cycle(4), 1), DomainError);
}

TEST(DisjointOutNeighbourhoods, AgreesWithExhaustiveCheck) {
  const Digraph g = conjunction(complete_with_loops(2), cycle(2));
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = x + 1; y < 4; ++y) EXPECT_FALSE(has_disjoint_outneighborhoods(g, VertexSet(4, {x, y})));
  Rng rng(61);
  for (int iter = 0; iter < 30; ++iter) {
    const Digraph h = random_digraph_min_degree(rng, 4 + iter % 3, 2, 2, true);
    const int n = h.order();
    for (int t = 1; t <= 3; ++t) {
      bool any = false;
      for (oracle::Mask m = 1; m <= oracle::full(n); ++m) {
        if (__builtin_popcount(m) != t) continue;
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
          if (m >> v & 1) s.insert(v);
        any = any || has_disjoint_outneighborhoods(h, s);
        if (m == oracle::full(n)) break;
      }
      const auto found = find_disjoint_outneighborhood_set(h, t);
      EXPECT_EQ(found.has_value(), any);
      if (found) { EXPECT_TRUE(has_disjoint_outneighborhoods(h, *found)); }
    }
  }
}

TEST(ConstructPdsL, Examples) {
  for (int d = 2; d <= 4; ++d) {
    const auto w = construct_pds_L(complete_with_loops(d), VertexSet(d, {0}));
    EXPECT_EQ(w.set.size(), d - 1);
    EXPECT_TRUE(is_power_dominating_set(w.host.graph, w.set));
  }
  const auto b = construct_pds_L(de_bruijn(2, 2), VertexSet(4, {0, 3}));
  EXPECT_EQ(b.set.size(), 2);
  EXPECT_EQ(construct_pds_L(complete_with_loops(3), VertexSet(3, {0})).set.size(), 2);
  EXPECT_THROW(construct_pds_L(de_bruijn(2, 2), VertexSet(4, {0, 1})), DomainError);
  EXPECT_THROW(construct_pds_L(cycle(3), VertexSet(3, {0})), DomainError);
}

TEST(ConstructPdsL, RandomCorpus) {
  Rng rng(67);
  for (int iter = 0; iter < 60; ++iter) {
    const Digraph g = random_digraph_min_degree(rng, 4 + iter % 4, 2, 2, iter % 2 == 0);
    for (int t = 1; t <= 2; ++t) {
      const auto s = find_disjoint_outneighborhood_set(g, t);
      if (!s) continue;
      // The unique-in-neighbour property behind the construction.
      for (Vertex v : out_neighborhood_of_set(g, *s, false).members())
        EXPECT_EQ(g.in_row(v).intersection_size(*s), 1);
      const auto w = construct_pds_L(g, *s);
      EXPECT_EQ(w.set.size(), g.order() - t);
      EXPECT_TRUE(is_power_dominating_set(w.host.graph, w.set));
    }
  }
}
