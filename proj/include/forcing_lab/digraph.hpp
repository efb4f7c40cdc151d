#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "forcing_lab/errors.hpp"
#include "forcing_lab/vertex_set.hpp"

namespace forcing_lab {

using Arc = std::pair<Vertex, Vertex>;

/// Loop-permitting simple digraph on vertices 0..n-1. Immutable after
/// construction; adjacency is stored forward and reverse, both as sorted
/// lists and as bit rows.
class Digraph {
 public:
  Digraph() : Digraph(1, {}) {}

  Digraph(int n, std::vector<Arc> arcs) : n_(n) {
    if (n < 1) throw DomainError("digraph needs at least one vertex");
    for (const auto& [u, v] : arcs) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw DomainError("arc (" + std::to_string(u) + "," +
                          std::to_string(v) + ") has an endpoint outside 0.." +
                          std::to_string(n - 1));
    }
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
      throw DomainError("parallel arcs are not allowed");
    arcs_ = std::move(arcs);

    out_.resize(n);
    in_.resize(n);
    out_rows_.assign(n, VertexSet(n));
    in_rows_.assign(n, VertexSet(n));
    for (const auto& [u, v] : arcs_) {
      out_[u].push_back(v);
      in_[v].push_back(u);
      out_rows_[u].insert(v);
      in_rows_[v].insert(u);
      if (u == v) has_loops_ = true;
    }
    for (auto& l : in_) std::sort(l.begin(), l.end());
  }

  int order() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_loops() const { return has_loops_; }
  bool has_arc(Vertex u, Vertex v) const {
    check(u);
    return out_rows_[u].contains(v);
  }

  /// Sorted open out-neighbors N^+(v).
  const std::vector<Vertex>& out(Vertex v) const {
    check(v);
    return out_[v];
  }
  /// Sorted open in-neighbors N^-(v).
  const std::vector<Vertex>& in(Vertex v) const {
    check(v);
    return in_[v];
  }
  const VertexSet& out_row(Vertex v) const {
    check(v);
    return out_rows_[v];
  }
  const VertexSet& in_row(Vertex v) const {
    check(v);
    return in_rows_[v];
  }
  int out_degree(Vertex v) const { return static_cast<int>(out(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in(v).size()); }

  void check(Vertex v) const {
    if (v < 0 || v >= n_)
      throw DomainError("vertex id " + std::to_string(v) + " outside 0.." +
                        std::to_string(n_ - 1));
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_;
  bool has_loops_ = false;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_, in_;
  std::vector<VertexSet> out_rows_, in_rows_;
};

inline VertexSet out_neighborhood(const Digraph& g, Vertex v, bool closed = false) {
  VertexSet s = g.out_row(v);
  if (closed) s.insert(v);
  return s;
}

inline VertexSet in_neighborhood(const Digraph& g, Vertex v, bool closed = false) {
  VertexSet s = g.in_row(v);
  if (closed) s.insert(v);
  return s;
}

/// N^+[T] (closed) or N^+(T) (open) for a vertex set T.
inline VertexSet out_neighborhood_of_set(const Digraph& g, const VertexSet& t,
                                         bool closed = true) {
  if (t.universe() != g.order())
    throw DomainError("vertex set universe does not match digraph order");
  VertexSet s(g.order());
  for (Vertex v : t.members()) s |= g.out_row(v);
  if (closed) s |= t;
  return s;
}

inline VertexSet in_neighborhood_of_set(const Digraph& g, const VertexSet& t,
                                        bool closed = true) {
  if (t.universe() != g.order())
    throw DomainError("vertex set universe does not match digraph order");
  VertexSet s(g.order());
  for (Vertex v : t.members()) s |= g.in_row(v);
  if (closed) s |= t;
  return s;
}

struct DegreeSummary {
  std::vector<int> out, in;
  int max_out = 0, max_in = 0, min_out = 0, min_in = 0;
};

inline DegreeSummary degrees(const Digraph& g) {
  DegreeSummary d;
  const int n = g.order();
  d.out.resize(n);
  d.in.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    d.out[v] = g.out_degree(v);
    d.in[v] = g.in_degree(v);
  }
  d.max_out = *std::max_element(d.out.begin(), d.out.end());
  d.min_out = *std::min_element(d.out.begin(), d.out.end());
  d.max_in = *std::max_element(d.in.begin(), d.in.end());
  d.min_in = *std::min_element(d.in.begin(), d.in.end());
  return d;
}

/// d when every vertex has in- and out-degree d.
inline std::optional<int> is_regular(const Digraph& g) {
  const int d = g.out_degree(0);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.out_degree(v) != d || g.in_degree(v) != d) return std::nullopt;
  return d;
}

/// Blocks of the underlying undirected graph, each sorted, ordered by least
/// member.
inline std::vector<std::vector<Vertex>> weak_components(const Digraph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(blocks.size());
    blocks.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      blocks[id].push_back(v);
      for (const auto* nbrs : {&g.out(v), &g.in(v)})
        for (Vertex w : *nbrs)
          if (comp[w] < 0) {
            comp[w] = id;
            stack.push_back(w);
          }
    }
    std::sort(blocks[id].begin(), blocks[id].end());
  }
  return blocks;
}

struct StrongComponents {
  /// Blocks in reverse topological order of the condensation (sinks first),
  /// each sorted.
  std::vector<std::vector<Vertex>> blocks;
  /// Block index of each vertex.
  std::vector<int> block_of;
  /// Condensation arcs (a, b): some arc leaves block a and enters block b.
  std::set<std::pair<int, int>> condensation;
};

/// Tarjan's algorithm, iterative.
inline StrongComponents strong_components(const Digraph& g) {
  const int n = g.order();
  StrongComponents sc;
  sc.block_of.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  int counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next_child;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = g.out(f.v);
      if (f.next_child < succ.size()) {
        Vertex w = succ[f.next_child++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> block;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          sc.block_of[w] = static_cast<int>(sc.blocks.size());
          block.push_back(w);
        } while (w != v);
        std::sort(block.begin(), block.end());
        sc.blocks.push_back(std::move(block));
      }
    }
  }
  for (const auto& [u, v] : g.arcs())
    if (sc.block_of[u] != sc.block_of[v])
      sc.condensation.emplace(sc.block_of[u], sc.block_of[v]);
  return sc;
}

/// The L-divergence test: some non-trivial strong component is not a cycle,
/// or two cyclic strong components are joined by a path. A loopless
/// singleton component carries no cycle and is ignored by both conditions.
inline bool is_L_divergent(const Digraph& g) {
  const StrongComponents sc = strong_components(g);
  const int k = static_cast<int>(sc.blocks.size());
  std::vector<int> internal(k, 0);
  for (const auto& [u, v] : g.arcs())
    if (sc.block_of[u] == sc.block_of[v]) ++internal[sc.block_of[u]];

  std::vector<bool> cyclic(k, false);
  for (int b = 0; b < k; ++b) {
    const int size = static_cast<int>(sc.blocks[b].size());
    if (internal[b] == 0) continue;  // loopless singleton
    if (internal[b] != size) return true;
    cyclic[b] = true;
  }

  std::vector<std::vector<int>> succ(k);
  for (const auto& [a, b] : sc.condensation) succ[a].push_back(b);
  for (int b = 0; b < k; ++b) {
    if (!cyclic[b]) continue;
    std::vector<bool> seen(k, false);
    std::vector<int> todo(succ[b].begin(), succ[b].end());
    while (!todo.empty()) {
      int c = todo.back();
      todo.pop_back();
      if (seen[c]) continue;
      seen[c] = true;
      if (cyclic[c]) return true;
      for (int e : succ[c]) todo.push_back(e);
    }
  }
  return false;
}

}  // namespace forcing_lab
