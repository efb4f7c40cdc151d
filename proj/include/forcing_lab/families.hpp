#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forcing_lab/digraph.hpp"

namespace forcing_lab {

namespace detail {

inline int checked_pow(int base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > (1 << 24)) throw DomainError("family order too large");
  }
  return static_cast<int>(r);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace detail

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0; cycle(1) is a single loop.
inline Digraph cycle(int n) {
  detail::require(n >= 1, "cycle needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
  return Digraph(n, std::move(arcs));
}

/// K_d: complete symmetric digraph with a loop on every vertex.
inline Digraph complete_with_loops(int d) {
  detail::require(d >= 1, "complete digraph needs d >= 1");
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < d; ++u)
    for (Vertex v = 0; v < d; ++v) arcs.emplace_back(u, v);
  return Digraph(d, std::move(arcs));
}

/// K*_m: complete symmetric digraph without loops.
inline Digraph complete_without_loops(int m) {
  detail::require(m >= 1, "complete digraph needs m >= 1");
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = 0; v < m; ++v)
      if (u != v) arcs.emplace_back(u, v);
  return Digraph(m, std::move(arcs));
}

/// B(d,D) on Z_{d^D}: x -> dx+t mod d^D, t in Z_d.
inline Digraph de_bruijn(int d, int D) {
  detail::require(d >= 2 && D >= 1, "de Bruijn needs d >= 2, D >= 1");
  const int n = detail::checked_pow(d, D);
  std::vector<Arc> arcs;
  for (Vertex x = 0; x < n; ++x)
    for (int t = 0; t < d; ++t)
      arcs.emplace_back(x, static_cast<Vertex>((static_cast<std::int64_t>(d) * x + t) % n));
  return Digraph(n, std::move(arcs));
}

/// Whether K(d,D) lies in the parameter range the closed formulas are
/// stated for (d >= 3). The generator itself accepts d >= 2.
inline bool kautz_in_formula_range(int d) { return d >= 3; }

/// Kautz tuples over Z_{d+1} of length D with distinct consecutive entries,
/// in lexicographic order.
inline std::vector<std::vector<int>> kautz_words(int d, int D) {
  std::vector<std::vector<int>> words{{}};
  for (int pos = 0; pos < D; ++pos) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      for (int s = 0; s <= d; ++s)
        if (w.empty() || w.back() != s) {
          auto x = w;
          x.push_back(s);
          next.push_back(std::move(x));
        }
    words = std::move(next);
  }
  return words;
}

/// K(d,D): shift adjacency (x_1..x_D) -> (x_2..x_D, y) with y != x_D.
inline Digraph kautz(int d, int D) {
  detail::require(d >= 2 && D >= 1, "Kautz needs d >= 2, D >= 1");
  detail::checked_pow(d + 1, D);
  const auto words = kautz_words(d, D);
  const int n = static_cast<int>(words.size());
  auto index = [&](const std::vector<int>& w) {
    return static_cast<Vertex>(std::lower_bound(words.begin(), words.end(), w) - words.begin());
  };
  std::vector<Arc> arcs;
  for (Vertex x = 0; x < n; ++x) {
    std::vector<int> shifted(words[x].begin() + 1, words[x].end());
    for (int y = 0; y <= d; ++y) {
      if (y == words[x].back()) continue;
      auto w = shifted;
      w.push_back(y);
      arcs.emplace_back(x, index(w));
    }
  }
  return Digraph(n, std::move(arcs));
}

/// GB(d,n) on Z_n: x -> (dx+t) mod n. Requires n >= d so that the d
/// targets are distinct.
inline Digraph gen_de_bruijn(int d, int n) {
  detail::require(d >= 2 && n >= 1, "generalized de Bruijn needs d >= 2, n >= 1");
  detail::require(n >= d, "generalized de Bruijn with n < d would need parallel arcs");
  std::vector<Arc> arcs;
  for (Vertex x = 0; x < n; ++x)
    for (int t = 0; t < d; ++t)
      arcs.emplace_back(x, static_cast<Vertex>((static_cast<std::int64_t>(d) * x + t) % n));
  return Digraph(n, std::move(arcs));
}

/// GK(d,n) (Imase-Itoh) on Z_n: x -> (-dx-t) mod n for t = 1..d. With
/// t = 0..d-1 instead, vertex 0 would carry a loop and K(d,D) would not be
/// GK(d, d^D + d^(D-1)). Requires n >= d.
inline Digraph gen_kautz(int d, int n) {
  detail::require(d >= 2 && n >= 1, "generalized Kautz needs d >= 2, n >= 1");
  detail::require(n >= d, "generalized Kautz with n < d would need parallel arcs");
  std::vector<Arc> arcs;
  for (Vertex x = 0; x < n; ++x)
    for (int t = 1; t <= d; ++t) {
      std::int64_t y = (-(static_cast<std::int64_t>(d) * x) - t) % n;
      if (y < 0) y += n;
      arcs.emplace_back(x, static_cast<Vertex>(y));
    }
  return Digraph(n, std::move(arcs));
}

/// G ⊗ H: vertex (g,h) has id g*|V(H)| + h; (g,h) -> (g',h') iff both
/// coordinate arcs exist.
inline Digraph conjunction(const Digraph& g, const Digraph& h) {
  const int m = h.order();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(g.arc_count()) * h.arc_count());
  for (const auto& [g1, g2] : g.arcs())
    for (const auto& [h1, h2] : h.arcs())
      arcs.emplace_back(g1 * m + h1, g2 * m + h2);
  return Digraph(g.order() * m, std::move(arcs));
}

/// Vertex id of (x, level) in WB(d,n), where x is read as a base-d number
/// with x[0] most significant.
inline Vertex wrapped_butterfly_id(int d, int n, const std::vector<int>& x, int level) {
  int code = 0;
  for (int c : x) code = code * d + c;
  return code * n + level;
}

/// WB(d,n): vertex (x,l), x in Z_d^n, 0 <= l < n, adjacent to the d vertices
/// (x', l+1 mod n) where x' agrees with x except possibly at coordinate l.
inline Digraph wrapped_butterfly(int d, int n) {
  detail::require(d >= 2 && n >= 2, "wrapped butterfly needs d >= 2, n >= 2");
  const int words = detail::checked_pow(d, n);
  detail::require(static_cast<std::int64_t>(words) * n < (1 << 24), "family order too large");
  std::vector<Arc> arcs;
  std::vector<int> x(n);
  for (int code = 0; code < words; ++code) {
    for (int i = n - 1, c = code; i >= 0; --i, c /= d) x[i] = c % d;
    for (int l = 0; l < n; ++l) {
      const Vertex from = wrapped_butterfly_id(d, n, x, l);
      auto y = x;
      for (int a = 0; a < d; ++a) {
        y[l] = a;
        arcs.emplace_back(from, wrapped_butterfly_id(d, n, y, (l + 1) % n));
      }
    }
  }
  return Digraph(words * n, std::move(arcs));
}

enum class Family {
  de_bruijn,
  kautz,
  gen_de_bruijn,
  gen_kautz,
  wrapped_butterfly,
  complete_loops,
  complete_noloops,
  cycle
};

struct FamilySpec {
  Family family;
  int d = 0;
  /// D for de Bruijn / Kautz; n for the other parameterized families.
  int size = 0;
};

inline std::optional<Family> parse_family(const std::string& tag) {
  static const std::vector<std::pair<std::string, Family>> tags = {
      {"de-bruijn", Family::de_bruijn},
      {"kautz", Family::kautz},
      {"gen-de-bruijn", Family::gen_de_bruijn},
      {"gen-kautz", Family::gen_kautz},
      {"wrapped-butterfly", Family::wrapped_butterfly},
      {"complete-loops", Family::complete_loops},
      {"complete-noloops", Family::complete_noloops},
      {"cycle", Family::cycle}};
  for (const auto& [name, f] : tags)
    if (name == tag) return f;
  return std::nullopt;
}

inline std::string family_name(const FamilySpec& s) {
  auto p = [](int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
  switch (s.family) {
    case Family::de_bruijn: return "B" + p(s.d, s.size);
    case Family::kautz: return "K" + p(s.d, s.size);
    case Family::gen_de_bruijn: return "GB" + p(s.d, s.size);
    case Family::gen_kautz: return "GK" + p(s.d, s.size);
    case Family::wrapped_butterfly: return "WB" + p(s.d, s.size);
    case Family::complete_loops: return "K_" + std::to_string(s.d);
    case Family::complete_noloops: return "K*_" + std::to_string(s.d);
    case Family::cycle: return "C_" + std::to_string(s.size);
  }
  return "?";
}

inline Digraph make_family(const FamilySpec& s) {
  switch (s.family) {
    case Family::de_bruijn: return de_bruijn(s.d, s.size);
    case Family::kautz: return kautz(s.d, s.size);
    case Family::gen_de_bruijn: return gen_de_bruijn(s.d, s.size);
    case Family::gen_kautz: return gen_kautz(s.d, s.size);
    case Family::wrapped_butterfly: return wrapped_butterfly(s.d, s.size);
    case Family::complete_loops: return complete_with_loops(s.d);
    case Family::complete_noloops: return complete_without_loops(s.d);
    case Family::cycle: return cycle(s.size);
  }
  throw DomainError("unknown family");
}

}  // namespace forcing_lab
