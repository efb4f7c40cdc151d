#pragma once

#include <map>
#include <string>
#include <vector>

#include "forcing_lab/digraph.hpp"

namespace forcing_lab {

using Walk = std::vector<Vertex>;

/// A digraph whose vertex x stands for the walk labels[x] of length depth+1
/// in a base digraph of order base_n. Vertex ids follow the lexicographic
/// order of the labels.
struct LineLabeledDigraph {
  Digraph graph;
  std::vector<Walk> labels;
  int base_n = 0;

  int depth() const {
    return labels.empty() ? 0 : static_cast<int>(labels.front().size()) - 1;
  }

  /// Vertex id of a walk, or -1 when the walk is not a vertex.
  Vertex find(const Walk& w) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), w);
    if (it == labels.end() || *it != w) return -1;
    return static_cast<Vertex>(it - labels.begin());
  }

  Vertex at(const Walk& w) const {
    Vertex v = find(w);
    if (v < 0) throw DomainError("walk " + walk_string(w) + " is not a vertex");
    return v;
  }

  static std::string walk_string(const Walk& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += "-";
      s += std::to_string(w[i]);
    }
    return s;
  }

  std::vector<std::string> label_strings() const {
    std::vector<std::string> out;
    out.reserve(labels.size());
    for (const auto& w : labels) out.push_back(walk_string(w));
    return out;
  }
};

/// G itself, each vertex labelled by the one-vertex walk.
inline LineLabeledDigraph trivially_labeled(const Digraph& g) {
  LineLabeledDigraph out{g, {}, g.order()};
  for (Vertex v = 0; v < g.order(); ++v) out.labels.push_back({v});
  return out;
}

/// One further line step on an already labelled digraph.
inline LineLabeledDigraph line_digraph(const LineLabeledDigraph& h) {
  const Digraph& g = h.graph;
  if (g.arc_count() == 0)
    throw DomainError("line digraph of an arcless digraph is empty");
  // Arcs are stored sorted, so the arc index is the line-vertex id.
  const auto& arcs = g.arcs();
  std::vector<int> first_arc_from(g.order() + 1, 0);
  for (const auto& [u, v] : arcs) ++first_arc_from[u + 1];
  for (int i = 0; i < g.order(); ++i) first_arc_from[i + 1] += first_arc_from[i];

  std::vector<Arc> line_arcs;
  std::vector<Walk> labels;
  labels.reserve(arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const auto [u, v] = arcs[a];
    for (int b = first_arc_from[v]; b < first_arc_from[v + 1]; ++b)
      line_arcs.emplace_back(static_cast<Vertex>(a), b);
    Walk w = h.labels[u];
    w.push_back(h.labels[v].back());
    labels.push_back(std::move(w));
  }
  return {Digraph(static_cast<int>(arcs.size()), std::move(line_arcs)),
          std::move(labels), h.base_n};
}

/// L(G): one vertex per arc (u,v), labelled by the walk u-v.
inline LineLabeledDigraph line_digraph(const Digraph& g) {
  return line_digraph(trivially_labeled(g));
}

/// L^k(G) with composed walk labels; L^0(G) is G with singleton labels.
inline LineLabeledDigraph iterated_line(const Digraph& g, int k) {
  if (k < 0) throw DomainError("iteration depth must be non-negative");
  LineLabeledDigraph h = trivially_labeled(g);
  for (int i = 0; i < k; ++i) h = line_digraph(h);
  return h;
}

}  // namespace forcing_lab
