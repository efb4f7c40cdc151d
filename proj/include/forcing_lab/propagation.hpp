#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "forcing_lab/digraph.hpp"

namespace forcing_lab {

enum class PropagationMode { zero_forcing, power_domination };

inline const char* mode_name(PropagationMode m) {
  return m == PropagationMode::zero_forcing ? "zero-forcing" : "power-domination";
}

/// One recorded force: forcer colours forced in round `round` (1-based).
struct Force {
  Vertex forcer;
  Vertex forced;
  int round;
  friend bool operator==(const Force&, const Force&) = default;
};

/// Round-by-round record of a closure. rounds[r-1] holds the vertices first
/// coloured in round r. In power-domination mode round 1 is the domination
/// step and is recorded even when it adds nothing.
struct PropagationTrace {
  PropagationMode mode = PropagationMode::zero_forcing;
  VertexSet initial;
  std::vector<VertexSet> rounds;
  std::vector<Force> certificate;
  VertexSet final_set;
  bool covers_all = false;
};

struct ClosureOptions {
  /// Permit an empty initial set. Off by default: forcing sets are
  /// non-empty by definition.
  bool allow_empty = false;
};

namespace detail {

inline void check_initial(const Digraph& g, const VertexSet& s, const ClosureOptions& opt) {
  if (s.universe() != g.order())
    throw DomainError("initial set universe " + std::to_string(s.universe()) +
                      " does not match digraph order " + std::to_string(g.order()));
  if (s.empty() && !opt.allow_empty) throw DomainError("initial set must be non-empty");
}

/// Applies the colour-change rule in synchronous rounds starting from
/// `colored`, appending to the trace. A forcer must be coloured unless the
/// digraph has a loop somewhere, in which case any vertex may force.
inline void run_rounds(const Digraph& g, VertexSet& colored, PropagationTrace& t) {
  const bool any_forcer = g.has_loops();
  const int n = g.order();
  while (true) {
    VertexSet fresh(n);
    std::vector<Force> forces;
    for (Vertex u = 0; u < n; ++u) {
      if (!any_forcer && !colored.contains(u)) continue;
      Vertex white = -1;
      int whites = 0;
      for (Vertex w : g.out(u))
        if (!colored.contains(w)) {
          white = w;
          if (++whites > 1) break;
        }
      if (whites == 1 && !fresh.contains(white)) {
        fresh.insert(white);
        forces.push_back({u, white, static_cast<int>(t.rounds.size()) + 1});
      }
    }
    if (fresh.empty()) break;
    std::sort(forces.begin(), forces.end(),
              [](const Force& a, const Force& b) { return a.forced < b.forced; });
    colored |= fresh;
    t.rounds.push_back(std::move(fresh));
    t.certificate.insert(t.certificate.end(), forces.begin(), forces.end());
  }
}

}  // namespace detail

/// Zero-forcing closure B^0(S), B^1(S), ... with all forces of a round
/// applied simultaneously. Each forced vertex is credited to its least-id
/// eligible forcer.
inline PropagationTrace zf_closure(const Digraph& g, const VertexSet& s,
                                   const ClosureOptions& opt = {}) {
  detail::check_initial(g, s, opt);
  PropagationTrace t;
  t.mode = PropagationMode::zero_forcing;
  t.initial = s;
  VertexSet colored = s;
  detail::run_rounds(g, colored, t);
  t.covers_all = colored.is_full();
  t.final_set = std::move(colored);
  return t;
}

/// Power-domination closure: P^1(S) = N^+[S], then zero-forcing rounds.
inline PropagationTrace pd_closure(const Digraph& g, const VertexSet& s,
                                   const ClosureOptions& opt = {}) {
  detail::check_initial(g, s, opt);
  PropagationTrace t;
  t.mode = PropagationMode::power_domination;
  t.initial = s;
  VertexSet colored = out_neighborhood_of_set(g, s, true);
  VertexSet first = colored - s;
  for (Vertex v : first.members())
    for (Vertex u : g.in(v))
      if (s.contains(u)) {
        t.certificate.push_back({u, v, 1});
        break;
      }
  t.rounds.push_back(std::move(first));
  detail::run_rounds(g, colored, t);
  t.covers_all = colored.is_full();
  t.final_set = std::move(colored);
  return t;
}

inline bool is_zero_forcing_set(const Digraph& g, const VertexSet& s) {
  return zf_closure(g, s).covers_all;
}

inline bool is_power_dominating_set(const Digraph& g, const VertexSet& s) {
  return pd_closure(g, s).covers_all;
}

/// Final coloured set only, computed with a work queue instead of rounds.
/// The closure does not depend on the order in which forces are applied, so
/// this agrees with zf_closure(g, s).final_set. Used by the solvers.
class FastCloser {
 public:
  explicit FastCloser(const Digraph& g) : g_(g), white_out_(g.order()) {}

  VertexSet close(const VertexSet& start) {
    const int n = g_.order();
    const bool any_forcer = g_.has_loops();
    VertexSet colored = start;
    queue_.clear();
    for (Vertex u = 0; u < n; ++u) {
      int c = 0;
      for (Vertex w : g_.out(u))
        if (!colored.contains(w)) ++c;
      white_out_[u] = c;
      if (c == 1 && (any_forcer || colored.contains(u))) queue_.push_back(u);
    }
    std::size_t head = 0;
    while (head < queue_.size()) {
      const Vertex u = queue_[head++];
      if (white_out_[u] != 1 || (!any_forcer && !colored.contains(u))) continue;
      Vertex target = -1;
      for (Vertex w : g_.out(u))
        if (!colored.contains(w)) {
          target = w;
          break;
        }
      colored.insert(target);
      // target is now coloured: it may force, and its in-neighbours lose a
      // white out-neighbour.
      if (!any_forcer && white_out_[target] == 1) queue_.push_back(target);
      for (Vertex p : g_.in(target)) {
        if (--white_out_[p] == 1 && (any_forcer || colored.contains(p))) queue_.push_back(p);
      }
    }
    return colored;
  }

 private:
  const Digraph& g_;
  std::vector<int> white_out_;
  std::vector<Vertex> queue_;
};

}  // namespace forcing_lab
