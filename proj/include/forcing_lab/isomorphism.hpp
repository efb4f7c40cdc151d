#pragma once

#include <map>
#include <optional>
#include <vector>

#include "forcing_lab/digraph.hpp"

namespace forcing_lab {

namespace detail {

/// Colour refinement run jointly on two digraphs so that colour ids are
/// comparable. Returns false as soon as the colour histograms differ.
class JointRefiner {
 public:
  JointRefiner(const Digraph& g, const Digraph& h) : g_(g), h_(h) {}

  bool refine(std::vector<int>& cg, std::vector<int>& ch) const {
    int classes = count_classes(cg, ch);
    while (true) {
      std::map<std::vector<int>, int> ids;
      std::vector<std::vector<int>> sg(cg.size()), sh(ch.size());
      for (std::size_t v = 0; v < cg.size(); ++v) ids.emplace(sg[v] = signature(g_, cg, v), 0);
      for (std::size_t v = 0; v < ch.size(); ++v) ids.emplace(sh[v] = signature(h_, ch, v), 0);
      int next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (std::size_t v = 0; v < cg.size(); ++v) cg[v] = ids[sg[v]];
      for (std::size_t v = 0; v < ch.size(); ++v) ch[v] = ids[sh[v]];
      if (!same_histogram(cg, ch, next)) return false;
      if (next == classes) return true;
      classes = next;
    }
  }

 private:
  static std::vector<int> signature(const Digraph& g, const std::vector<int>& c, std::size_t v) {
    std::vector<int> sig{c[v], g.has_arc(static_cast<Vertex>(v), static_cast<Vertex>(v)) ? 1 : 0};
    std::vector<int> out, in;
    for (Vertex w : g.out(static_cast<Vertex>(v))) out.push_back(c[w]);
    for (Vertex w : g.in(static_cast<Vertex>(v))) in.push_back(c[w]);
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    sig.push_back(-1);
    sig.insert(sig.end(), out.begin(), out.end());
    sig.push_back(-2);
    sig.insert(sig.end(), in.begin(), in.end());
    return sig;
  }
  static int count_classes(const std::vector<int>& cg, const std::vector<int>& ch) {
    std::vector<int> all(cg);
    all.insert(all.end(), ch.begin(), ch.end());
    std::sort(all.begin(), all.end());
    return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
  }
  static bool same_histogram(const std::vector<int>& cg, const std::vector<int>& ch, int k) {
    std::vector<int> a(k, 0);
    for (int c : cg) ++a[c];
    for (int c : ch) --a[c];
    for (int x : a)
      if (x != 0) return false;
    return true;
  }

  const Digraph& g_;
  const Digraph& h_;
};

class IsoSearch {
 public:
  IsoSearch(const Digraph& g, const Digraph& h)
      : g_(g), h_(h), refiner_(g, h), phi_(g.order(), -1), used_(h.order(), false) {}

  std::optional<std::vector<Vertex>> run() {
    std::vector<int> cg(g_.order(), 0), ch(h_.order(), 0);
    if (!refiner_.refine(cg, ch)) return std::nullopt;
    if (!extend(0, cg, ch)) return std::nullopt;
    return phi_;
  }

 private:
  bool consistent(Vertex v, Vertex w) const {
    if (g_.has_arc(v, v) != h_.has_arc(w, w)) return false;
    for (Vertex u = 0; u < v; ++u) {
      if (g_.has_arc(u, v) != h_.has_arc(phi_[u], w)) return false;
      if (g_.has_arc(v, u) != h_.has_arc(w, phi_[u])) return false;
    }
    return true;
  }

  bool extend(Vertex v, const std::vector<int>& cg, const std::vector<int>& ch) {
    if (v == g_.order()) return true;
    for (Vertex w = 0; w < h_.order(); ++w) {
      if (used_[w] || ch[w] != cg[v] || !consistent(v, w)) continue;
      std::vector<int> ng(cg), nh(ch);
      const int fresh = static_cast<int>(g_.order() + h_.order()) + 1;
      ng[v] = fresh;
      nh[w] = fresh;
      if (!refiner_.refine(ng, nh)) continue;
      phi_[v] = w;
      used_[w] = true;
      if (extend(v + 1, ng, nh)) return true;
      used_[w] = false;
      phi_[v] = -1;
    }
    return false;
  }

  const Digraph& g_;
  const Digraph& h_;
  JointRefiner refiner_;
  std::vector<Vertex> phi_;
  std::vector<bool> used_;
};

}  // namespace detail

/// A bijection phi with (u,v) in A(G) iff (phi[u],phi[v]) in A(H), or
/// nullopt. When several exist the lexicographically least (phi[0], phi[1],
/// ...) is returned. Colour refinement with individualisation prunes the
/// backtracking; intended for a few hundred vertices.
inline std::optional<std::vector<Vertex>> are_isomorphic(const Digraph& g, const Digraph& h) {
  if (g.order() != h.order() || g.arc_count() != h.arc_count()) return std::nullopt;
  return detail::IsoSearch(g, h).run();
}

/// Checks that phi is an isomorphism from G onto H.
inline bool is_isomorphism(const Digraph& g, const Digraph& h, const std::vector<Vertex>& phi) {
  if (g.order() != h.order() || g.arc_count() != h.arc_count() ||
      static_cast<int>(phi.size()) != g.order())
    return false;
  std::vector<bool> hit(h.order(), false);
  for (Vertex w : phi) {
    if (w < 0 || w >= h.order() || hit[w]) return false;
    hit[w] = true;
  }
  for (const auto& [u, v] : g.arcs())
    if (!h.has_arc(phi[u], phi[v])) return false;
  return true;
}

}  // namespace forcing_lab
