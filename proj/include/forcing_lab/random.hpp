#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "forcing_lab/digraph.hpp"

namespace forcing_lab {

using Rng = std::mt19937_64;

/// Each ordered pair (loops included when allow_loops) becomes an arc with
/// probability p.
inline Digraph random_digraph(Rng& rng, int n, double p, bool allow_loops) {
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if ((u != v || allow_loops) && coin(rng)) arcs.emplace_back(u, v);
  return Digraph(n, std::move(arcs));
}

/// Random digraph with the given minimum out- and in-degree, by rejection.
inline Digraph random_digraph_min_degree(Rng& rng, int n, int min_out, int min_in, bool allow_loops) {
  std::uniform_real_distribution<double> density(0.35, 0.8);
  while (true) {
    Digraph g = random_digraph(rng, n, density(rng), allow_loops);
    const DegreeSummary d = degrees(g);
    if (d.min_out >= min_out && d.min_in >= min_in) return g;
  }
}

/// Union of d arc-disjoint random permutations: a d-regular digraph. Fixed
/// points become loops, so loops appear only when allow_loops.
inline Digraph random_regular_digraph(Rng& rng, int n, int d, bool allow_loops = true) {
  if (d > (allow_loops ? n : n - 1)) throw DomainError("degree too large for order");
  while (true) {
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    std::vector<Arc> arcs;
    bool ok = true;
    for (int layer = 0; layer < d && ok; ++layer) {
      // A few attempts per layer before restarting from scratch.
      bool placed = false;
      for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        bool clash = false;
        for (Vertex u = 0; u < n && !clash; ++u)
          clash = used[u][perm[u]] || (!allow_loops && perm[u] == u);
        if (clash) continue;
        for (Vertex u = 0; u < n; ++u) {
          used[u][perm[u]] = true;
          arcs.emplace_back(u, perm[u]);
        }
        placed = true;
      }
      ok = placed;
    }
    if (ok) return Digraph(n, std::move(arcs));
  }
}

/// Every d-regular digraph on n labelled vertices (loops allowed), in
/// lexicographic order of adjacency rows. Intended for n <= 5.
inline std::vector<Digraph> all_regular_digraphs(int n, int d) {
  std::vector<std::vector<Vertex>> rows;  // all d-subsets of 0..n-1
  std::vector<Vertex> cur;
  auto subsets = [&](auto&& self, Vertex from) -> void {
    if (static_cast<int>(cur.size()) == d) {
      rows.push_back(cur);
      return;
    }
    for (Vertex v = from; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  subsets(subsets, 0);

  std::vector<Digraph> out;
  std::vector<int> in(n, 0);
  std::vector<int> pick(n, 0);
  auto build = [&](auto&& self, Vertex u) -> void {
    if (u == n) {
      std::vector<Arc> arcs;
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y : rows[pick[x]]) arcs.emplace_back(x, y);
      out.emplace_back(n, std::move(arcs));
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      bool ok = true;
      for (Vertex y : rows[r]) ok = ok && in[y] < d;
      if (!ok) continue;
      for (Vertex y : rows[r]) ++in[y];
      pick[u] = static_cast<int>(r);
      self(self, u + 1);
      for (Vertex y : rows[r]) --in[y];
    }
  };
  build(build, 0);
  return out;
}

}  // namespace forcing_lab
