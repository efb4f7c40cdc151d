#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "forcing_lab/digraph.hpp"
#include "forcing_lab/line.hpp"
#include "forcing_lab/propagation.hpp"

namespace forcing_lab {

/// A witness set together with the iterated line digraph it lives in.
struct LineWitness {
  LineLabeledDigraph host;
  VertexSet set;
};

/// Cycles made only of in-degree-1 vertices, each listed along its arcs
/// starting from its least vertex. A vertex lies on at most one of them.
inline std::vector<std::vector<Vertex>> in_degree_one_cycles(const Digraph& g) {
  const int n = g.order();
  // Following the unique in-arc backwards from an in-degree-1 vertex either
  // leaves the set or closes a cycle.
  std::vector<int> state(n, 0);  // 0 unseen, 1 on current path, 2 done
  std::vector<std::vector<Vertex>> cycles;
  std::vector<int> owner(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (state[s] != 0 || g.in_degree(s) != 1) continue;
    std::vector<Vertex> path;
    Vertex v = s;
    while (v >= 0 && state[v] == 0 && g.in_degree(v) == 1) {
      state[v] = 1;
      path.push_back(v);
      v = g.in(v).front();
    }
    if (v >= 0 && state[v] == 1) {
      // path from v onwards is a cycle traversed against the arcs.
      auto it = std::find(path.begin(), path.end(), v);
      std::vector<Vertex> cyc(it, path.end());
      std::reverse(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      for (Vertex x : cyc) {
        if (owner[x] >= 0) throw InternalError("vertex on two in-degree-1 cycles");
        owner[x] = static_cast<int>(cycles.size());
      }
      cycles.push_back(std::move(cyc));
    }
    for (Vertex x : path) state[x] = 2;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

/// Minimum zero forcing set of L(G) of size |A(G)| - |V(G)|: for each vertex
/// v all arcs vw except one arc v w_v, where w_v is the least out-neighbour
/// not lying on an in-degree-1 cycle. Requires δ^+ >= 2 and δ^- >= 1.
inline LineWitness construct_zfs_line(const Digraph& g) {
  const DegreeSummary deg = degrees(g);
  if (deg.min_out < 2 || deg.min_in < 1)
    throw DomainError("construct_zfs_line needs min out-degree >= 2 and min in-degree >= 1");
  VertexSet on_bad_cycle(g.order());
  for (const auto& c : in_degree_one_cycles(g))
    for (Vertex v : c) on_bad_cycle.insert(v);

  LineWitness w{line_digraph(g), {}};
  w.set = VertexSet(w.host.graph.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    Vertex keep = -1;
    for (Vertex x : g.out(v))
      if (!on_bad_cycle.contains(x)) {
        keep = x;
        break;
      }
    if (keep < 0) throw InternalError("no out-neighbour off the in-degree-1 cycles");
    for (Vertex x : g.out(v))
      if (x != keep) w.set.insert(w.host.at({v, x}));
  }
  if (w.set.size() != g.arc_count() - g.order() || !is_zero_forcing_set(w.host.graph, w.set))
    throw InternalError("constructed line zero forcing set failed verification");
  return w;
}

/// Spanning 1-regular sub-digraph as the permutation f with f(v) = u iff the
/// factor contains the arc (u, v).
struct OneFactor {
  std::vector<Vertex> f;

  /// Orbits of f, i.e. the factor's cycles, each starting at its least vertex
  /// and listed along the arcs.
  std::vector<std::vector<Vertex>> cycles() const {
    const int n = static_cast<int>(f.size());
    std::vector<Vertex> succ(n);
    for (Vertex v = 0; v < n; ++v) succ[f[v]] = v;
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> c;
      for (Vertex v = s; !seen[v]; v = succ[v]) {
        seen[v] = true;
        c.push_back(v);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::vector<Arc> arcs() const {
    std::vector<Arc> a;
    for (Vertex v = 0; v < static_cast<Vertex>(f.size()); ++v) a.emplace_back(f[v], v);
    std::sort(a.begin(), a.end());
    return a;
  }
};

/// (f(v), v) is an arc of G for every v and f is a bijection.
inline bool is_one_factor(const Digraph& g, const OneFactor& x) {
  if (static_cast<int>(x.f.size()) != g.order()) return false;
  std::vector<bool> hit(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex u = x.f[v];
    if (u < 0 || u >= g.order() || hit[u] || !g.has_arc(u, v)) return false;
    hit[u] = true;
  }
  return true;
}

/// Every cycle of the factor has a vertex of in-degree > 1 in G.
inline bool is_good_factor(const Digraph& g, const OneFactor& x) {
  for (const auto& c : x.cycles()) {
    bool ok = false;
    for (Vertex v : c) ok = ok || g.in_degree(v) > 1;
    if (!ok) return false;
  }
  return true;
}

namespace detail {

/// Perfect matching of tails to heads over the arc lists `out` by
/// augmenting paths, visiting tails and heads in increasing id. Returns
/// f with f[head] = tail, or nullopt.
inline std::optional<std::vector<Vertex>> perfect_matching(
    const std::vector<std::vector<Vertex>>& out) {
  const int n = static_cast<int>(out.size());
  std::vector<Vertex> tail_of(n, -1);
  std::vector<int> stamp(n, -1);
  auto augment = [&](auto&& self, Vertex u, int round) -> bool {
    for (Vertex v : out[u]) {
      if (stamp[v] == round) continue;
      stamp[v] = round;
      if (tail_of[v] < 0 || self(self, tail_of[v], round)) {
        tail_of[v] = u;
        return true;
      }
    }
    return false;
  };
  for (Vertex u = 0; u < n; ++u)
    if (!augment(augment, u, u)) return std::nullopt;
  return tail_of;
}

inline std::vector<std::vector<Vertex>> out_lists(const Digraph& g) {
  std::vector<std::vector<Vertex>> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.out(v);
  return out;
}

}  // namespace detail

enum class FactorStatus { found, none };

struct FactorResult {
  FactorStatus status = FactorStatus::none;
  std::optional<OneFactor> factor;
};

/// A 1-factor from a perfect matching of the out/in incidence graph. With
/// require_good, each factor cycle must also contain a vertex of in-degree
/// > 1. No search over other factors is needed for that: a vertex of
/// in-degree 1 has its factor in-arc forced, so a cycle made only of such
/// vertices lies in every 1-factor.
inline FactorResult one_factor(const Digraph& g, bool require_good = false) {
  auto m = detail::perfect_matching(detail::out_lists(g));
  if (!m) return {FactorStatus::none, std::nullopt};
  OneFactor first{*m};
  if (require_good && !is_good_factor(g, first)) return {FactorStatus::none, std::nullopt};
  return {FactorStatus::found, first};
}

/// d arc-disjoint 1-factors covering A(G) for a d-regular G, obtained by
/// extracting a perfect matching d times.
inline std::vector<OneFactor> cycle_factorization(const Digraph& g) {
  const auto d = is_regular(g);
  if (!d) throw DomainError("cycle factorization needs a regular digraph");
  auto out = detail::out_lists(g);
  std::vector<OneFactor> factors;
  for (int i = 0; i < *d; ++i) {
    auto m = detail::perfect_matching(out);
    if (!m) throw InternalError("regular remainder without a perfect matching");
    for (Vertex v = 0; v < g.order(); ++v) {
      auto& l = out[(*m)[v]];
      l.erase(std::find(l.begin(), l.end(), v));
    }
    factors.push_back({std::move(*m)});
  }
  return factors;
}

/// Checks the factors are valid 1-factors with disjoint arc sets whose union
/// is A(G).
inline bool is_cycle_factorization(const Digraph& g, const std::vector<OneFactor>& factors) {
  std::vector<Arc> all;
  for (const auto& x : factors) {
    if (!is_one_factor(g, x)) return false;
    const auto a = x.arcs();
    all.insert(all.end(), a.begin(), a.end());
  }
  std::sort(all.begin(), all.end());
  return all == g.arcs();
}

/// Power dominating set of L^2(G) of size |A(G)| - |V(G)| built from a good
/// 1-factor: all walks f(u) u v with u != f(v). Requires δ^+ >= 2, δ^- >= 1.
inline LineWitness construct_pds_L2(const Digraph& g, const OneFactor& factor) {
  const DegreeSummary deg = degrees(g);
  if (deg.min_out < 2 || deg.min_in < 1)
    throw DomainError("construct_pds_L2 needs min out-degree >= 2 and min in-degree >= 1");
  if (!is_one_factor(g, factor)) throw DomainError("not a 1-factor of the digraph");
  if (!is_good_factor(g, factor))
    throw DomainError("some factor cycle has only in-degree-1 vertices");
  LineWitness w{iterated_line(g, 2), {}};
  w.set = VertexSet(w.host.graph.order());
  for (const auto& [u, v] : g.arcs())
    if (u != factor.f[v]) w.set.insert(w.host.at({factor.f[u], u, v}));
  if (w.set.size() != g.arc_count() - g.order() || !is_power_dominating_set(w.host.graph, w.set))
    throw InternalError("constructed L^2 power dominating set failed verification");
  return w;
}

/// S satisfies: out-neighbourhoods of distinct members are disjoint, and each
/// member x has N^+(x) ∩ S empty or equal to {x}.
inline bool has_disjoint_outneighborhoods(const Digraph& g, const VertexSet& s) {
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Vertex x = members[i];
    const VertexSet inside = g.out_row(x) & s;
    if (!inside.empty() && inside != VertexSet(g.order(), {x})) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.out_row(x).intersects(g.out_row(members[j]))) return false;
  }
  return true;
}

/// Backtracking search (members in increasing id) for a set of the given
/// size with has_disjoint_outneighborhoods. Requires δ^+ >= 2, δ^- >= 2.
inline std::optional<VertexSet> find_disjoint_outneighborhood_set(const Digraph& g, int target) {
  const DegreeSummary deg = degrees(g);
  if (deg.min_out < 2 || deg.min_in < 2)
    throw DomainError("needs min out-degree >= 2 and min in-degree >= 2");
  if (target < 0) throw DomainError("target size must be non-negative");
  const int n = g.order();
  std::vector<Vertex> chosen;
  VertexSet covered(n);  // union of chosen out-neighbourhoods
  auto compatible = [&](Vertex y) {
    if (g.out_row(y).intersects(covered)) return false;
    for (Vertex x : chosen)
      if (g.has_arc(y, x) || g.has_arc(x, y)) return false;
    return true;
  };
  auto search = [&](auto&& self, Vertex from) -> bool {
    if (static_cast<int>(chosen.size()) == target) return true;
    for (Vertex y = from; y < n; ++y) {
      if (n - y < target - static_cast<int>(chosen.size())) return false;
      if (!compatible(y)) continue;
      chosen.push_back(y);
      covered |= g.out_row(y);
      if (self(self, y + 1)) return true;
      covered -= g.out_row(y);
      chosen.pop_back();
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return VertexSet::from(n, chosen);
}

/// Power dominating set of L(G) of size |V(G)| - |S| for S with disjoint
/// out-neighbourhoods: one arc u v into every v outside S, where u is the
/// unique in-neighbour of v in S when v is dominated by S and the least
/// in-neighbour otherwise. Requires δ^+ >= 2, δ^- >= 2.
inline LineWitness construct_pds_L(const Digraph& g, const VertexSet& s) {
  const DegreeSummary deg = degrees(g);
  if (deg.min_out < 2 || deg.min_in < 2)
    throw DomainError("construct_pds_L needs min out-degree >= 2 and min in-degree >= 2");
  if (s.universe() != g.order()) throw DomainError("vertex set universe does not match digraph order");
  if (!has_disjoint_outneighborhoods(g, s))
    throw DomainError("set violates the disjoint out-neighbourhood conditions");

  const VertexSet dominated = out_neighborhood_of_set(g, s, false);
  LineWitness w{line_digraph(g), {}};
  w.set = VertexSet(w.host.graph.order());
  // Non-members in natural order; members of S come last and contribute no arc.
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    Vertex u = g.in(v).front();
    if (dominated.contains(v)) {
      const VertexSet from_s = g.in_row(v) & s;
      if (from_s.size() != 1) throw InternalError("dominated vertex without a unique in-neighbour in S");
      u = from_s.first();
    }
    w.set.insert(w.host.at({u, v}));
  }
  if (w.set.size() != g.order() - s.size() || !is_power_dominating_set(w.host.graph, w.set))
    throw InternalError("constructed line power dominating set failed verification");
  return w;
}

}  // namespace forcing_lab
