#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "forcing_lab/digraph.hpp"

namespace forcing_lab {

namespace detail {

inline void check_critical_arg(const Digraph& g, const VertexSet& w) {
  if (w.universe() != g.order()) throw DomainError("vertex set universe does not match digraph order");
  if (w.empty()) throw DomainError("critical sets are non-empty");
}

/// True iff no vertex (outside W, when skip_members) has exactly one
/// out-neighbour in W.
inline bool no_single_hit(const Digraph& g, const VertexSet& w, bool skip_members) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (skip_members && w.contains(v)) continue;
    if (g.out_row(v).intersection_size(w) == 1) return false;
  }
  return true;
}

}  // namespace detail

/// Every v outside W has |N^+(v) ∩ W| != 1.
inline bool is_critical(const Digraph& g, const VertexSet& w) {
  detail::check_critical_arg(g, w);
  return detail::no_single_hit(g, w, true);
}

/// Every v in V(G) has |N^+(v) ∩ W| != 1.
inline bool is_strongly_critical(const Digraph& g, const VertexSet& w) {
  detail::check_critical_arg(g, w);
  return detail::no_single_hit(g, w, false);
}

/// The set type every zero forcing set must meet: critical sets in loopless
/// digraphs, strongly critical sets once a loop is present.
inline bool is_fort(const Digraph& g, const VertexSet& w) {
  return g.has_loops() ? is_strongly_critical(g, w) : is_critical(g, w);
}

enum class SearchStatus { found, not_found_at_scale };

struct DisjointFamily {
  SearchStatus status = SearchStatus::not_found_at_scale;
  std::vector<VertexSet> sets;
};

struct FamilySearchOptions {
  /// Use critical instead of strongly critical sets. Only sound as a zero
  /// forcing lower bound for loopless digraphs.
  bool critical_variant = false;
  /// General subsets are enumerated only up to this order.
  int max_general_n = 12;
  /// Backtracking node budget; exhausting it reports not_found_at_scale.
  long max_nodes = 2'000'000;
};

/// Searches for k pairwise disjoint (strongly) critical sets, which certifies
/// Z(G) >= k. Candidates derived from out-neighbourhoods (2-subsets and whole
/// neighbourhoods) are tried first, then every subset when n is small. A
/// miss only means nothing was found at this scale.
inline DisjointFamily disjoint_strongly_critical_family(const Digraph& g, int k,
                                                        const FamilySearchOptions& opt = {}) {
  if (k < 1) throw DomainError("target count must be at least 1");
  const int n = g.order();
  auto passes = [&](const VertexSet& w) {
    return opt.critical_variant ? is_critical(g, w) : is_strongly_critical(g, w);
  };

  std::vector<VertexSet> candidates;
  std::set<std::vector<std::uint64_t>> seen;
  auto add = [&](const VertexSet& w) {
    if (w.empty() || seen.count(w.words()) || !passes(w)) return;
    seen.insert(w.words());
    candidates.push_back(w);
  };
  for (Vertex v = 0; v < n; ++v) {
    const auto& nb = g.out(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) add(VertexSet(n, {nb[i], nb[j]}));
    add(g.out_row(v));
  }
  if (n <= opt.max_general_n) {
    std::vector<VertexSet> general;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      VertexSet w(n);
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1u) w.insert(v);
      general.push_back(std::move(w));
    }
    std::stable_sort(general.begin(), general.end(), [](const VertexSet& a, const VertexSet& b) {
      return a.size() < b.size() || (a.size() == b.size() && lex_less(a, b));
    });
    for (const auto& w : general) add(w);
  }

  DisjointFamily result;
  std::vector<int> chosen;
  VertexSet used(n);
  // Depth-first over candidate indices in order; first hit wins.
  long nodes = 0;
  auto search = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    if (++nodes > opt.max_nodes) return false;
    for (std::size_t i = from; i < candidates.size(); ++i) {
      if (candidates[i].intersects(used)) continue;
      chosen.push_back(static_cast<int>(i));
      used |= candidates[i];
      if (self(self, i + 1)) return true;
      used -= candidates[i];
      chosen.pop_back();
    }
    return false;
  };
  if (search(search, 0)) {
    result.status = SearchStatus::found;
    for (int i : chosen) result.sets.push_back(candidates[i]);
  }
  return result;
}

}  // namespace forcing_lab
