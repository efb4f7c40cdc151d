#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "forcing_lab/digraph.hpp"
#include "forcing_lab/line.hpp"

namespace forcing_lab {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw DomainError("matrix dimensions must be positive");
    entries_.assign(static_cast<std::size_t>(rows) * cols, BigInt(0));
  }
  static ExactMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty() || rows.front().empty()) throw DomainError("matrix dimensions must be positive");
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[i].size()) != m.cols_) throw DomainError("ragged matrix rows");
      for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const BigInt& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  /// Decimal strings, row by row.
  std::vector<std::vector<std::string>> to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).str());
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<BigInt> entries_;
};

/// 0/1 adjacency matrix; diagonal entries are 1 exactly at loops.
inline ExactMatrix adjacency_matrix(const Digraph& g) {
  ExactMatrix m(g.order(), g.order());
  for (const auto& [u, v] : g.arcs()) m(u, v) = 1;
  return m;
}

struct RankResult {
  int rank = 0;
  int nullity = 0;  // cols - rank
};

/// Rank over Q by Bareiss fraction-free elimination. Every division is exact,
/// so all intermediate values stay integral.
inline RankResult rank_exact(ExactMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return {r, cols - r};
}

/// Minimum rank / maximum nullity report for L^k(G) of a regular G.
struct LineRankReport {
  int d = 0;
  int depth = 0;
  int order = 0;              // |V(L^k(G))|
  int adjacency_rank = 0;
  int adjacency_nullity = 0;
  long long z_formula = 0;    // (d-1) d^{k-1} |V(G)|
  long long mr_formula = 0;   // d^{k-1} |V(G)|
  bool rank_check = false;    // adjacency rank == order / d
  /// nullity(A) <= M <= Z. When tight, M and mr are exact.
  long long m_lower = 0, m_upper = 0;
  std::optional<long long> max_nullity, min_rank;
  bool cycle_case = false;    // d = 1: Z = 1, M = 1, mr = n-1
};

/// Builds L^k(G) for d-regular G, computes its exact adjacency rank and
/// reports mr and M through nullity(A) <= M <= Z with Z from the line
/// formula. For d = 1 (disjoint cycles are the only 1-regular digraphs,
/// connected ones being cycles) reports the cycle values instead.
inline LineRankReport mr_and_M_regular_line(const Digraph& g, int k) {
  auto d = is_regular(g);
  if (!d || *d < 1) throw DomainError("input digraph must be regular of degree >= 1");
  if (k < 1) throw DomainError("iteration depth must be at least 1");
  LineRankReport rep;
  rep.d = *d;
  rep.depth = k;
  const int base = g.order();
  if (*d == 1) {
    if (weak_components(g).size() != 1) throw DomainError("1-regular input must be a single cycle");
    rep.cycle_case = true;
    rep.order = base;
    const RankResult rr = rank_exact(adjacency_matrix(g));
    rep.adjacency_rank = rr.rank;
    rep.adjacency_nullity = rr.nullity;
    rep.z_formula = 1;
    rep.mr_formula = base - 1;
    rep.rank_check = true;
    rep.m_lower = rep.m_upper = 1;
    rep.max_nullity = 1;
    rep.min_rank = base - 1;
    return rep;
  }
  const LineLabeledDigraph line = iterated_line(g, k);
  rep.order = line.graph.order();
  const RankResult rr = rank_exact(adjacency_matrix(line.graph));
  rep.adjacency_rank = rr.rank;
  rep.adjacency_nullity = rr.nullity;
  long long pw = 1;
  for (int i = 0; i < k - 1; ++i) pw *= *d;
  rep.z_formula = (*d - 1) * pw * base;
  rep.mr_formula = pw * base;
  rep.rank_check = rep.order % *d == 0 && rr.rank == rep.order / *d;
  rep.m_lower = rr.nullity;
  rep.m_upper = rep.z_formula;
  if (rep.m_lower == rep.m_upper) {
    rep.max_nullity = rep.m_lower;
    rep.min_rank = rep.order - rep.m_lower;
  }
  return rep;
}

}  // namespace forcing_lab
