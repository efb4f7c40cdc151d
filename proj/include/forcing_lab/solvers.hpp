#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "forcing_lab/critical.hpp"
#include "forcing_lab/digraph.hpp"
#include "forcing_lab/propagation.hpp"

namespace forcing_lab {

struct SolverLimits {
  int max_n = 24;
  long long max_nodes = 500'000'000;
  double max_seconds = 600.0;
  /// Worker threads for the top-level shards. Results do not depend on it.
  int jobs = 1;
};

/// Default limits, with max_n taken from FORCING_LAB_MAX_N when set.
inline SolverLimits limits_from_env() {
  SolverLimits l;
  if (const char* s = std::getenv("FORCING_LAB_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) l.max_n = static_cast<int>(v);
  }
  return l;
}

struct SolverOptions {
  SolverLimits limits = limits_from_env();
  /// Sound pruning by learned forts. Off gives plain lexicographic subset
  /// enumeration, kept as an independent cross-check.
  bool pruning = true;
  /// Externally certified lower bound on the answer (sizes below it are
  /// skipped). Callers are responsible for its validity.
  int lower_bound = 0;
};

struct ZeroForcingResult {
  int z = 0;
  VertexSet witness;
  long long nodes = 0;
};

struct PowerDominationResult {
  int gamma_p = 0;
  VertexSet witness;
  long long nodes = 0;
};

namespace detail {

/// Exhaustive lexicographic search for the least k-subset with the forcing
/// property. Every subset skipped is excluded by a fort: a set that every
/// zero forcing set meets (a critical set, or a strongly critical set when
/// the digraph has loops). Forts come from out-neighbourhood pairs and are
/// learned from the uncoloured remainder of each failed candidate.
class ForcingSearch {
 public:
  using Clock = std::chrono::steady_clock;

  ForcingSearch(const Digraph& g, PropagationMode mode, const SolverOptions& opt,
                Clock::time_point deadline)
      : g_(g), mode_(mode), opt_(opt), deadline_(deadline), closer_(g) {
    const int n = g.order();
    suffix_.assign(n + 1, VertexSet(n));
    for (int i = n - 1; i >= 0; --i) {
      suffix_[i] = suffix_[i + 1];
      suffix_[i].insert(i);
    }
    if (opt_.pruning) seed();
  }

  long long nodes() const { return nodes_; }
  const std::vector<VertexSet>& forts() const { return forts_; }
  void absorb(const ForcingSearch& other) {
    for (const auto& w : other.forts_) add_fort(w);
  }

  /// Lower bound at the root from the seeded forts.
  int root_bound() {
    VertexSet none(g_.order());
    return bound(none, dominated_of(none), 0);
  }

  /// Least k-subset whose first member is `first`, if any.
  std::optional<VertexSet> search_with_first(int k, Vertex first) {
    const int n = g_.order();
    VertexSet chosen(n);
    chosen.insert(first);
    VertexSet dom = dominated_of(chosen);
    // Vertices before `first` are excluded.
    if (!feasible(chosen, dom, first + 1, k - 1)) return std::nullopt;
    if (dfs(chosen, dom, first + 1, k - 1)) return found_;
    return std::nullopt;
  }

 private:
  bool zf() const { return mode_ == PropagationMode::zero_forcing; }

  VertexSet dominated_of(const VertexSet& chosen) const {
    return zf() ? chosen : out_neighborhood_of_set(g_, chosen, true);
  }

  void tick() {
    if (++nodes_ > opt_.limits.max_nodes)
      throw ResourceError("solver node budget of " + std::to_string(opt_.limits.max_nodes) +
                          " exceeded");
    if ((nodes_ & 4095) == 0 && Clock::now() > deadline_)
      throw ResourceError("solver wall-clock budget exceeded");
  }

  void add_fort(const VertexSet& w) {
    if (!seen_.insert(w.words()).second) return;
    forts_.push_back(w);
    hitters_.push_back(zf() ? w : in_neighborhood_of_set(g_, w, true));
  }

  void seed() {
    const int n = g_.order();
    // Singletons without an eligible in-neighbour, and pairs inside an
    // out-neighbourhood.
    for (Vertex v = 0; v < n; ++v) {
      VertexSet s(n, {v});
      if (is_fort(g_, s)) add_fort(s);
    }
    VertexSet in_block(n);
    for (Vertex v = 0; v < n; ++v) {
      const auto& nb = g_.out(v);
      bool all_pairs = nb.size() >= 2;
      for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
          VertexSet p(n, {nb[a], nb[b]});
          if (is_fort(g_, p))
            add_fort(p);
          else
            all_pairs = false;
        }
      // Every pair of a block is a fort, so a zero forcing set holds all
      // but at most one block member.
      if (zf() && all_pairs && !g_.out_row(v).intersects(in_block)) {
        blocks_.push_back(g_.out_row(v));
        in_block |= g_.out_row(v);
      }
    }
  }

  /// Lower bound on how many more members a completion of `chosen` at
  /// position i needs, or a value > remaining when some fort cannot be hit.
  int bound(const VertexSet& chosen, const VertexSet& dom, int i, int remaining = 1 << 29) {
    const VertexSet& open = suffix_[i];
    int need = 0;
    VertexSet used(g_.order());
    for (const auto& b : blocks_) {
      const int want = b.size() - 1 - b.intersection_size(chosen);
      if (want <= 0) continue;
      const VertexSet avail = b & open;
      if (avail.size() < want) return remaining + 1;
      need += want;
      used |= avail;
    }
    for (std::size_t f = 0; f < forts_.size(); ++f) {
      if (forts_[f].intersects(dom)) continue;
      if (!hitters_[f].intersects(open)) return remaining + 1;
      if (!opt_.pruning) continue;
      const VertexSet avail = hitters_[f] & open;
      if (!avail.intersects(used)) {
        ++need;
        used |= avail;
      }
    }
    return need;
  }

  bool feasible(const VertexSet& chosen, const VertexSet& dom, int i, int remaining) {
    if (remaining > g_.order() - i || remaining < 0) return false;
    if (!opt_.pruning) return true;
    return bound(chosen, dom, i, remaining) <= remaining;
  }

  bool test_leaf(const VertexSet& chosen, const VertexSet& dom) {
    const VertexSet closed = closer_.close(dom);
    if (closed.is_full()) {
      found_ = chosen;
      return true;
    }
    if (opt_.pruning) learn(closed.complement());
    return false;
  }

  /// Shrinks the uncoloured remainder to a smaller fort, dropping high ids
  /// first so that the fort is decided early in the lexicographic order.
  void learn(VertexSet w) {
    const auto members = w.members();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      if (w.size() == 1) break;
      VertexSet smaller = w;
      smaller.erase(*it);
      if (is_fort(g_, smaller)) w = std::move(smaller);
    }
    add_fort(w);
  }

  bool dfs(VertexSet& chosen, const VertexSet& dom, int i, int remaining) {
    tick();
    if (remaining == 0) return test_leaf(chosen, dom);
    const int n = g_.order();
    for (Vertex v = i; v < n; ++v) {
      // Include v, with i..v-1 excluded.
      if (n - v < remaining) return false;
      chosen.insert(v);
      VertexSet d2 = dom;
      if (zf())
        d2.insert(v);
      else
        d2 |= out_neighborhood(g_, v, true);
      if (feasible(chosen, d2, v + 1, remaining - 1) && dfs(chosen, d2, v + 1, remaining - 1))
        return true;
      chosen.erase(v);
      // Excluding v as well must keep the remaining forts hittable.
      if (opt_.pruning && !feasible(chosen, dom, v + 1, remaining)) return false;
    }
    return false;
  }

  const Digraph& g_;
  PropagationMode mode_;
  SolverOptions opt_;
  Clock::time_point deadline_;
  FastCloser closer_;
  std::vector<VertexSet> suffix_;
  std::vector<VertexSet> forts_, hitters_, blocks_;
  std::set<std::vector<std::uint64_t>> seen_;
  VertexSet found_;
  long long nodes_ = 0;
};

struct SearchOutcome {
  int size;
  VertexSet witness;
  long long nodes;
};

inline SearchOutcome minimum_forcing(const Digraph& g, PropagationMode mode, const SolverOptions& opt) {
  const int n = g.order();
  if (n > opt.limits.max_n)
    throw ResourceError("order " + std::to_string(n) + " exceeds solver limit " +
                        std::to_string(opt.limits.max_n));
  const auto deadline = ForcingSearch::Clock::now() +
                        std::chrono::duration_cast<ForcingSearch::Clock::duration>(
                            std::chrono::duration<double>(opt.limits.max_seconds));
  ForcingSearch main(g, mode, opt, deadline);
  int start = std::max(1, opt.lower_bound);
  if (opt.pruning) start = std::max(start, main.root_bound());
  const int jobs = std::max(1, opt.limits.jobs);
  long long extra_nodes = 0;

  for (int k = start; k <= n; ++k) {
    for (Vertex first = 0; first + k <= n; first += jobs) {
      if (jobs == 1) {
        if (auto hit = main.search_with_first(k, first))
          return {k, *hit, main.nodes() + extra_nodes};
        continue;
      }
      // One shard per leading member; the least leading member with a hit
      // gives the lexicographically least witness.
      std::vector<ForcingSearch> workers;
      const int last = std::min(n - k, first + jobs - 1);
      for (Vertex f = first; f <= last; ++f) workers.push_back(main);
      std::vector<std::future<std::optional<VertexSet>>> futures;
      for (Vertex f = first; f <= last; ++f)
        futures.push_back(std::async(std::launch::async, [&workers, f, first, k] {
          return workers[f - first].search_with_first(k, f);
        }));
      std::optional<SearchOutcome> best;
      for (Vertex f = first; f <= last; ++f) {
        auto hit = futures[f - first].get();
        if (hit && !best) best = SearchOutcome{k, *hit, 0};
      }
      for (const auto& w : workers) {
        extra_nodes += w.nodes() - main.nodes();
        main.absorb(w);
      }
      if (best) {
        best->nodes = main.nodes() + extra_nodes;
        return *best;
      }
    }
  }
  throw InternalError("the full vertex set always forces");
}

}  // namespace detail

/// Z(G) and the lexicographically least minimum zero forcing set, by
/// exhaustive search over subset sizes from the best available lower bound.
inline ZeroForcingResult min_zero_forcing(const Digraph& g, const SolverOptions& opt = {}) {
  auto r = detail::minimum_forcing(g, PropagationMode::zero_forcing, opt);
  return {r.size, std::move(r.witness), r.nodes};
}

/// γ_P(G) and the lexicographically least minimum power dominating set.
inline PowerDominationResult min_power_dominating(const Digraph& g, const SolverOptions& opt = {}) {
  auto r = detail::minimum_forcing(g, PropagationMode::power_domination, opt);
  return {r.size, std::move(r.witness), r.nodes};
}

/// γ_P >= ceil(Z / (Δ^+ + 1)) for any digraph, since N^+[S] of a power
/// dominating set S is a zero forcing set.
inline int pd_lower_bound_from_z(const Digraph& g, int z) {
  const int cap = degrees(g).max_out + 1;
  return (z + cap - 1) / cap;
}

}  // namespace forcing_lab
