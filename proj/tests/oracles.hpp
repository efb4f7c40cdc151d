#pragma once

// Test-only reference implementations. They share nothing with the library
// beyond the Digraph container, and favour obviousness over speed.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <queue>
#include <vector>

#include "forcing_lab/digraph.hpp"

namespace oracle {

using forcing_lab::Digraph;
using Mask = std::uint32_t;  // vertex sets for n <= 20

inline bool arc(const Digraph& g, int u, int v) { return g.has_arc(u, v); }

/// B^{i+1}(S) from B^i(S), straight from the set recurrence.
inline Mask zf_step(const Digraph& g, Mask b) {
  const int n = g.order();
  bool loops = false;
  for (int v = 0; v < n; ++v) loops = loops || arc(g, v, v);
  Mask next = b;
  for (int u = 0; u < n; ++u) {
    if (!loops && !(b >> u & 1)) continue;
    int white = -1, count = 0;
    for (int v = 0; v < n; ++v)
      if (arc(g, u, v) && !(b >> v & 1)) {
        white = v;
        ++count;
      }
    if (count == 1) next |= Mask(1) << white;
  }
  return next;
}

inline Mask zf_closure(const Digraph& g, Mask s) {
  while (true) {
    const Mask t = zf_step(g, s);
    if (t == s) return s;
    s = t;
  }
}

inline Mask full(int n) { return n == 32 ? ~Mask(0) : (Mask(1) << n) - 1; }

inline bool is_zfs(const Digraph& g, Mask s) { return zf_closure(g, s) == full(g.order()); }

inline Mask closed_out(const Digraph& g, Mask s) {
  Mask out = s;
  for (int u = 0; u < g.order(); ++u)
    if (s >> u & 1)
      for (int v = 0; v < g.order(); ++v)
        if (arc(g, u, v)) out |= Mask(1) << v;
  return out;
}

inline bool is_pds(const Digraph& g, Mask s) { return is_zfs(g, closed_out(g, s)); }

/// Minimum over all non-empty subsets, scanning by size then by mask value.
template <typename Pred>
int minimum(const Digraph& g, Pred ok) {
  const int n = g.order();
  int best = n;
  for (Mask s = 1; s <= full(n); ++s) {
    const int c = __builtin_popcount(s);
    if (c < best && ok(g, s)) best = c;
    if (s == full(n)) break;
  }
  return best;
}

inline int brute_z(const Digraph& g) { return minimum(g, is_zfs); }
inline int brute_gamma_p(const Digraph& g) { return minimum(g, is_pds); }

/// Rank over Q by Gauss-Jordan elimination on rationals.
inline int rational_rank(std::vector<std::vector<boost::multiprecision::cpp_rational>> a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const boost::multiprecision::cpp_rational f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline int adjacency_rational_rank(const Digraph& g) {
  const int n = g.order();
  std::vector<std::vector<boost::multiprecision::cpp_rational>> a(n, std::vector<boost::multiprecision::cpp_rational>(n, 0));
  for (const auto& [u, v] : g.arcs()) a[u][v] = 1;
  return rational_rank(std::move(a));
}

/// Whether g is the line digraph of some multidigraph on m vertices: each
/// vertex x gets a tail t(x) and head h(x) with x -> y iff h(x) = t(y).
inline bool has_line_preimage(const Digraph& g, int m) {
  const int n = g.order();
  std::vector<int> t(n, -1), h(n, -1);
  auto consistent = [&](int x) {
    for (int y = 0; y <= x; ++y) {
      if (arc(g, x, y) != (h[x] == t[y])) return false;
      if (arc(g, y, x) != (h[y] == t[x])) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int x, int used) -> bool {
    if (x == n) return true;
    // Preimage vertices are interchangeable, so a new one is always the next
    // unused index.
    for (int a = 0; a < std::min(m, used + 1); ++a)
      for (int b = 0; b < std::min(m, std::max(used, a + 1) + 1); ++b) {
        t[x] = a;
        h[x] = b;
        if (consistent(x) && self(self, x + 1, std::max(used, std::max(a, b) + 1))) return true;
      }
    t[x] = h[x] = -1;
    return false;
  };
  return search(search, 0, 0);
}

/// Weak components by breadth-first search, as a component id per vertex.
inline std::vector<int> weak_component_ids(const Digraph& g) {
  const int n = g.order();
  std::vector<int> id(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (id[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    id[s] = next;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if ((arc(g, u, v) || arc(g, v, u)) && id[v] < 0) {
          id[v] = next;
          q.push(v);
        }
    }
    ++next;
  }
  return id;
}

/// Reachability matrix (reflexive) by repeated search.
inline std::vector<std::vector<bool>> reach(const Digraph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack{s};
    r[s][s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (arc(g, u, v) && !r[s][v]) {
          r[s][v] = true;
          stack.push_back(v);
        }
    }
  }
  return r;
}

}  // namespace oracle
