#include <gtest/gtest.h>

#include "forcing_lab/families.hpp"
#include "forcing_lab/propagation.hpp"
#include "forcing_lab/random.hpp"
#include "oracles.hpp"

using namespace forcing_lab;

namespace {

oracle::Mask mask_of(const VertexSet& s) {
  oracle::Mask m = 0;
  for (Vertex v : s.members()) m |= oracle::Mask(1) << v;
  return m;
}

VertexSet random_nonempty_subset(Rng& rng, int n) {
  std::uniform_int_distribution<oracle::Mask> pick(1, (oracle::Mask(1) << n) - 1);
  const oracle::Mask m = pick(rng);
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (m >> v & 1) s.insert(v);
  return s;
}

/// Replays a trace against its own invariants.
void check_trace(const Digraph& g, const PropagationTrace& t) {
  const int n = g.order();
  VertexSet colored = t.initial;
  for (std::size_t r = 0; r < t.rounds.size(); ++r) {
    EXPECT_FALSE(t.rounds[r].intersects(colored));
    VertexSet rebuilt(n);
    for (const auto& f : t.certificate) {
      if (f.round != static_cast<int>(r) + 1) continue;
      rebuilt.insert(f.forced);
      if (t.mode == PropagationMode::power_domination && f.round == 1) {
        EXPECT_TRUE(t.initial.contains(f.forcer));
        EXPECT_TRUE(g.has_arc(f.forcer, f.forced));
        continue;
      }
      EXPECT_EQ((g.out_row(f.forcer) - colored).members(), std::vector<Vertex>{f.forced});
      if (!g.has_loops()) { EXPECT_TRUE(colored.contains(f.forcer)); }
    }
    EXPECT_EQ(rebuilt, t.rounds[r]);
    colored |= t.rounds[r];
  }
  EXPECT_EQ(colored, t.final_set);
  EXPECT_EQ(t.covers_all, t.final_set.size() == n);
  EXPECT_LE(static_cast<int>(t.rounds.size()), n);
}

}  // namespace

TEST(ZeroForcing, PathChain) {
  const Digraph g(3, {{0, 1}, {1, 2}});
  const auto t = zf_closure(g, VertexSet(3, {0}));
  ASSERT_EQ(t.rounds.size(), 2u);
  EXPECT_EQ(t.rounds[0].members(), std::vector<Vertex>{1});
  EXPECT_EQ(t.rounds[1].members(), std::vector<Vertex>{2});
  EXPECT_TRUE(t.covers_all);
  EXPECT_EQ(t.certificate, (std::vector<Force>{{0, 1, 1}, {1, 2, 2}}));
}

TEST(ZeroForcing, DeBruijnLoopsForceThemselves) {
  const auto t = zf_closure(de_bruijn(2, 2), VertexSet(4, {1, 2}));
  ASSERT_FALSE(t.rounds.empty());
  EXPECT_EQ(t.rounds[0].members(), (std::vector<Vertex>{0, 3}));
  EXPECT_TRUE(t.covers_all);
  check_trace(de_bruijn(2, 2), t);
}

TEST(ZeroForcing, CycleTakesThreeRounds) {
  const auto t = zf_closure(cycle(4), VertexSet(4, {0}));
  EXPECT_TRUE(t.covers_all);
  EXPECT_EQ(t.rounds.size(), 3u);
}

TEST(ZeroForcing, MembershipOnCompleteDigraph) {
  const Digraph k = complete_without_loops(3);
  for (Vertex a = 0; a < 3; ++a) {
    EXPECT_FALSE(is_zero_forcing_set(k, VertexSet(3, {a})));
    EXPECT_EQ(is_zero_forcing_set(k, VertexSet(3, {a})), oracle::is_zfs(k, oracle::Mask(1) << a));
    for (Vertex b = a + 1; b < 3; ++b) EXPECT_TRUE(is_zero_forcing_set(k, VertexSet(3, {a, b})));
  }
  EXPECT_TRUE(is_zero_forcing_set(de_bruijn(2, 3), VertexSet::full(8)));
}

TEST(ZeroForcing, Errors) {
  const Digraph g = cycle(3);
  EXPECT_THROW(zf_closure(g, VertexSet(3)), DomainError);
  EXPECT_THROW(zf_closure(g, VertexSet(4, {0})), DomainError);
  EXPECT_THROW(pd_closure(g, VertexSet(3)), DomainError);
}

TEST(ZeroForcing, EmptySetEscapeHatch) {
  // A looped vertex forces itself from nothing under the global loop rule.
  const Digraph g(1, {{0, 0}});
  const auto t = zf_closure(g, VertexSet(1), ClosureOptions{true});
  EXPECT_TRUE(t.covers_all);
}

TEST(ZeroForcing, LoopRule) {
  const Digraph g(2, {{0, 1}, {1, 1}});
  const auto t = zf_closure(g, VertexSet(2, {0}));
  EXPECT_TRUE(t.final_set.contains(1));
  // A white looped vertex whose other out-neighbours are coloured forces
  // itself in the next round, even though it is not coloured.
  const Digraph h(3, {{0, 0}, {0, 1}, {1, 2}, {2, 1}});
  const auto u = zf_closure(h, VertexSet(3, {1}));
  ASSERT_FALSE(u.rounds.empty());
  EXPECT_TRUE(u.rounds[0].contains(0));
  EXPECT_TRUE(u.covers_all);
  check_trace(h, u);
  // Without any loop an uncoloured vertex never forces.
  EXPECT_FALSE(zf_closure(Digraph(3, {{0, 1}}), VertexSet(3, {2})).final_set.contains(1));
  // A loop anywhere lets the same white vertex force.
  EXPECT_TRUE(zf_closure(Digraph(3, {{0, 1}, {2, 2}}), VertexSet(3, {2})).final_set.contains(1));
}

TEST(PowerDomination, Examples) {
  const Digraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto t = pd_closure(star, VertexSet(4, {0}));
  ASSERT_FALSE(t.rounds.empty());
  EXPECT_EQ(t.rounds[0].members(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(t.covers_all);
  check_trace(star, t);

  const Digraph b = de_bruijn(2, 3);
  for (Vertex v = 0; v < 8; ++v) EXPECT_FALSE(is_power_dominating_set(b, VertexSet(8, {v})));
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_power_dominating_set(cycle(n), VertexSet(n, {0})));
  EXPECT_TRUE(is_power_dominating_set(b, VertexSet::full(8)));

  const Digraph b32 = de_bruijn(3, 2);
  bool some_pair = false;
  for (Vertex x = 0; x < 9; ++x)
    for (Vertex y = x + 1; y < 9; ++y) some_pair = some_pair || is_power_dominating_set(b32, VertexSet(9, {x, y}));
  EXPECT_TRUE(some_pair);
}

TEST(PowerDomination, FirstRoundAlwaysRecorded) {
  const Digraph g(2, {{1, 0}});
  const auto t = pd_closure(g, VertexSet(2, {0}));
  ASSERT_EQ(t.rounds.size(), 1u);
  EXPECT_TRUE(t.rounds[0].empty());
  EXPECT_FALSE(t.covers_all);
}

TEST(PropagationProperties, AgreesWithSetRecurrence) {
  Rng rng(101);
  for (int iter = 0; iter < 400; ++iter) {
    const int n = 1 + iter % 10;
    const Digraph g = random_digraph(rng, n, 0.3, iter % 3 == 0);
    const VertexSet s = random_nonempty_subset(rng, n);
    const auto t = zf_closure(g, s);
    check_trace(g, t);
    EXPECT_EQ(mask_of(t.final_set), oracle::zf_closure(g, mask_of(s)));
    // Rounds are exactly the successive differences of B^i(S).
    oracle::Mask b = mask_of(s);
    for (const auto& round : t.rounds) {
      const oracle::Mask next = oracle::zf_step(g, b);
      EXPECT_EQ(mask_of(round), next & ~b);
      b = next;
    }
    EXPECT_EQ(oracle::zf_step(g, b), b);
    EXPECT_EQ(FastCloser(g).close(s), t.final_set);

    const auto p = pd_closure(g, s);
    check_trace(g, p);
    EXPECT_EQ(p.covers_all, oracle::is_pds(g, mask_of(s)));
  }
}

TEST(PropagationProperties, SupersetsStayForcing) {
  Rng rng(202);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 2 + iter % 8;
    const Digraph g = random_digraph(rng, n, 0.35, iter % 2 == 0);
    const VertexSet s = random_nonempty_subset(rng, n);
    const VertexSet bigger = s | random_nonempty_subset(rng, n);
    if (is_zero_forcing_set(g, s)) { EXPECT_TRUE(is_zero_forcing_set(g, bigger)); }
    if (is_power_dominating_set(g, s)) { EXPECT_TRUE(is_power_dominating_set(g, bigger)); }
  }
}

TEST(PropagationProperties, PowerDominationBridge) {
  Rng rng(303);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 1 + iter % 8;
    const Digraph g = random_digraph(rng, n, 0.3, iter % 2 == 0);
    const VertexSet s = random_nonempty_subset(rng, n);
    EXPECT_EQ(is_power_dominating_set(g, s), is_zero_forcing_set(g, out_neighborhood_of_set(g, s, true)));
  }
}
