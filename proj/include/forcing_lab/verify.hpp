#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "forcing_lab/constructions.hpp"
#include "forcing_lab/exact_rank.hpp"
#include "forcing_lab/families.hpp"
#include "forcing_lab/isomorphism.hpp"
#include "forcing_lab/line.hpp"
#include "forcing_lab/propagation.hpp"
#include "forcing_lab/random.hpp"
#include "forcing_lab/solvers.hpp"

// Named verification suites: each checks one family of closed-form claims
// against the exhaustive solvers, exact rank, and the constructions.

namespace forcing_lab::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline SolverOptions solver_options() {
  SolverOptions o;
  o.limits.max_n = 64;
  return o;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// One representative per isomorphism class, first occurrence kept.
inline std::vector<Digraph> iso_classes(const std::vector<Digraph>& gs) {
  std::vector<Digraph> reps;
  for (const auto& g : gs) {
    bool fresh = true;
    for (const auto& r : reps)
      if (are_isomorphic(g, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(g);
  }
  return reps;
}

/// d-regular digraphs up to isomorphism for d in {2,3} and order <= 4.
inline std::vector<std::pair<int, Digraph>> small_regular_corpus() {
  std::vector<std::pair<int, Digraph>> out;
  for (int d : {2, 3})
    for (int n = d; n <= 4; ++n)
      for (auto& g : iso_classes(all_regular_digraphs(n, d))) out.emplace_back(d, std::move(g));
  return out;
}

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  CriterionResult result(int id, std::string name) const {
    std::ostringstream os;
    os << checks_ - failed_ << "/" << checks_ << " checks";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& f : failures_) os << "; FAILED " << f;
    return {id, std::move(name), failed_ == 0 && checks_ > 0, os.str()};
  }

 private:
  int checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
};

inline std::string str(long long v) { return std::to_string(v); }

}  // namespace detail

/// Z(L(G)) = |A(G)| - |V(G)| on 100 random digraphs with δ^+ >= 2, δ^- >= 1.
inline CriterionResult line_zero_forcing_formula() {
  detail::Tally t;
  Rng rng(0x5eed0001);
  const auto opt = detail::solver_options();
  for (int i = 0; i < 100; ++i) {
    const int n = 4 + i % 3;
    const Digraph g = random_digraph_min_degree(rng, n, 2, 1, i % 2 == 0);
    const int expected = g.arc_count() - g.order();
    const auto line = line_digraph(g);
    const auto z = min_zero_forcing(line.graph, opt);
    const auto w = construct_zfs_line(g);
    t.expect(z.z == expected, "instance " + detail::str(i) + ": Z(L(G))=" + detail::str(z.z) +
                                  " vs |A|-|V|=" + detail::str(expected));
    t.expect(w.set.size() == expected && is_zero_forcing_set(w.host.graph, w.set),
             "instance " + detail::str(i) + ": construction");
  }
  return t.result(1, "Line-ZF formula");
}

inline CriterionResult de_bruijn_suite() {
  detail::Tally t;
  const auto opt = detail::solver_options();
  struct Case {
    int d, D;
    int z, gamma;
  };
  for (const Case c : {Case{2, 2, 2, 1}, Case{2, 3, 4, 2}, Case{3, 2, 6, 2}}) {
    const Digraph b = de_bruijn(c.d, c.D);
    const std::string tag = "B(" + detail::str(c.d) + "," + detail::str(c.D) + ")";
    const auto z = min_zero_forcing(b, opt);
    const auto p = min_power_dominating(b, opt);
    t.expect(z.z == c.z && c.z == (c.d - 1) * detail::ipow(c.d, c.D - 1),
             "Z" + tag + "=" + detail::str(z.z));
    t.expect(p.gamma_p == c.gamma && c.gamma == (c.d - 1) * detail::ipow(c.d, c.D - 2),
             "gamma_P" + tag + "=" + detail::str(p.gamma_p));
  }
  const RankResult r = rank_exact(adjacency_matrix(de_bruijn(2, 3)));
  t.expect(r.rank == 4, "rank B(2,3)=" + detail::str(r.rank));
  const auto rep = mr_and_M_regular_line(complete_with_loops(2), 2);
  t.expect(rep.min_rank == 4 && rep.max_nullity == 4, "mr/M of B(2,3) via L^2(K_2)");
  t.expect(are_isomorphic(iterated_line(complete_with_loops(2), 2).graph, de_bruijn(2, 3)).has_value(),
           "B(2,3) = L^2(K_2)");
  return t.result(2, "de Bruijn suite");
}

inline CriterionResult kautz_suite() {
  detail::Tally t;
  const Digraph k32 = kautz(3, 2), k33 = kautz(3, 3);
  const int z = k32.arc_count() - k32.order();
  t.expect(k32.arc_count() == 36 && k32.order() == 12, "K(3,2) has 12 vertices and 36 arcs");
  t.expect(z == 24 && z == (3 - 1) * 3 * (3 + 1), "Z(K(3,3)) = 36 - 12 = 24");
  t.expect(are_isomorphic(line_digraph(k32).graph, k33).has_value(), "K(3,3) = L(K(3,2))");
  const RankResult r = rank_exact(adjacency_matrix(k33));
  t.expect(r.rank == 12, "rank K(3,3)=" + detail::str(r.rank));
  const Digraph base = complete_without_loops(4);
  const auto factor = one_factor(base, true);
  t.expect(factor.status == FactorStatus::found, "K*_4 has a 1-factor");
  if (factor.factor) {
    const auto w = construct_pds_L2(base, *factor.factor);
    t.expect(are_isomorphic(w.host.graph, k33).has_value(), "L^2(K*_4) = K(3,3)");
    const int upper = w.set.size();
    const int delta = degrees(k33).max_out;
    const int lower = (z + delta - 1) / delta;
    t.expect(upper == 8 && lower == 8, "gamma_P(K(3,3)) in [" + detail::str(lower) + "," +
                                            detail::str(upper) + "]");
  }
  return t.result(3, "Kautz suite");
}

inline CriterionResult generalized_suite() {
  detail::Tally t;
  t.expect(are_isomorphic(gen_de_bruijn(2, 6), line_digraph(gen_de_bruijn(2, 3)).graph).has_value(),
           "GB(2,6) = L(GB(2,3))");
  t.expect(are_isomorphic(gen_kautz(2, 6), line_digraph(gen_kautz(2, 3)).graph).has_value(),
           "GK(2,6) = L(GK(2,3))");
  const auto z = min_zero_forcing(gen_de_bruijn(2, 12), detail::solver_options());
  t.expect(z.z == 6 && z.z == (2 - 1) * 2 * 3, "Z(GB(2,12))=" + detail::str(z.z));
  return t.result(4, "Generalized families");
}

inline CriterionResult wrapped_butterfly_suite() {
  detail::Tally t;
  const Digraph wb = wrapped_butterfly(2, 2);
  const Digraph base = conjunction(complete_with_loops(2), cycle(2));
  t.expect(are_isomorphic(wb, line_digraph(base).graph).has_value(), "WB(2,2) = L(K_2 x C_2)");
  const auto opt = detail::solver_options();
  const auto z = min_zero_forcing(wb, opt);
  t.expect(z.z == 4, "Z(WB(2,2))=" + detail::str(z.z));
  const RankResult r = rank_exact(adjacency_matrix(wb));
  t.expect(wb.order() - r.nullity == 4 && r.nullity == z.z, "mr(WB(2,2))=" + detail::str(r.rank));
  const auto p = min_power_dominating(wb, opt);
  t.expect(is_power_dominating_set(wb, p.witness) && p.witness.size() == p.gamma_p,
           "brute-force gamma_P witness");
  // The closed form 2(d-1) for WB(d,2) is recorded against the exhaustive
  // value; agreement is reported, not required.
  for (int d : {2, 3}) {
    const Digraph w = wrapped_butterfly(d, 2);
    const auto pd = d == 2 ? p : min_power_dominating(w, opt);
    const int claimed = 2 * (d - 1);
    t.note("gamma_P(WB(" + detail::str(d) + ",2))=" + detail::str(pd.gamma_p) +
           (pd.gamma_p == claimed ? " agrees with" : " differs from") + " 2(d-1)=" + detail::str(claimed));
  }
  return t.result(5, "Wrapped butterfly");
}

/// rank A(L(G)) = |V(L(G))| / d on random d-regular G.
inline CriterionResult gimbert_rank() {
  detail::Tally t;
  Rng rng(0x5eed0006);
  for (int i = 0; i < 20; ++i) {
    const int d = 2 + i % 2;
    const int n = d + static_cast<int>(rng() % (6 - d + 1));
    const Digraph g = random_regular_digraph(rng, n, d);
    const auto line = line_digraph(g);
    const RankResult r = rank_exact(adjacency_matrix(line.graph));
    t.expect(r.rank * d == line.graph.order(),
             "instance " + detail::str(i) + ": rank " + detail::str(r.rank));
  }
  return t.result(6, "Gimbert rank lemma");
}

/// Adjacency nullity of L^k(G) equals brute-force Z(L^k(G)).
inline CriterionResult max_nullity_equals_z() {
  detail::Tally t;
  const auto opt = detail::solver_options();
  int instances = 0;
  for (const auto& [d, g] : detail::small_regular_corpus())
    for (int k : {1, 2}) {
      const Digraph lk = iterated_line(g, k).graph;
      const RankResult r = rank_exact(adjacency_matrix(lk));
      const auto z = min_zero_forcing(lk, opt);
      ++instances;
      t.expect(r.nullity == z.z && z.z == (d - 1) * detail::ipow(d, k - 1) * g.order(),
               "d=" + detail::str(d) + " n=" + detail::str(g.order()) + " k=" + detail::str(k) +
                   ": nullity " + detail::str(r.nullity) + " Z " + detail::str(z.z));
    }
  t.note(detail::str(instances) + " instances");
  return t.result(7, "M=Z collapse");
}

/// S is power dominating iff N^+[S] is zero forcing.
inline CriterionResult pd_zf_bridge() {
  detail::Tally t;
  Rng rng(0x5eed0008);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Digraph g = random_digraph(rng, n, density(rng), i % 2 == 0);
    VertexSet s(n);
    while (s.empty())
      for (Vertex v = 0; v < n; ++v)
        if (rng() % 3 == 0) s.insert(v);
    const bool pd = is_power_dominating_set(g, s);
    const bool zf = is_zero_forcing_set(g, out_neighborhood_of_set(g, s, true));
    t.expect(pd == zf, "instance " + detail::str(i));
  }
  return t.result(8, "PD/ZF bridge");
}

inline CriterionResult cycle_factorization_suite() {
  detail::Tally t;
  Rng rng(0x5eed0009);
  for (int i = 0; i < 20; ++i) {
    const int d = 1 + i % 4;
    const int n = d + static_cast<int>(rng() % (9 - d));
    const Digraph g = random_regular_digraph(rng, n, d, i % 3 != 0 || d == n);
    const auto fs = cycle_factorization(g);
    t.expect(static_cast<int>(fs.size()) == d && is_cycle_factorization(g, fs),
             "instance " + detail::str(i));
  }
  return t.result(9, "Cycle factorization");
}

/// Z(L^k(G)) >= γ_P(L^k(G)) >= ceil(Z / Δ^+(G)) wherever both are brute-forced.
inline CriterionResult sandwich_bound() {
  detail::Tally t;
  const auto opt = detail::solver_options();
  auto check = [&](const Digraph& base, int k, const std::string& tag) {
    const Digraph lk = iterated_line(base, k).graph;
    const int z = min_zero_forcing(lk, opt).z;
    const int gp = min_power_dominating(lk, opt).gamma_p;
    const int delta = degrees(base).max_out;
    t.expect(z >= gp && gp * delta >= z, tag + ": Z=" + detail::str(z) + " gamma_P=" + detail::str(gp));
  };
  check(complete_with_loops(2), 1, "B(2,2)");
  check(complete_with_loops(2), 2, "B(2,3)");
  check(complete_with_loops(3), 1, "B(3,2)");
  check(conjunction(complete_with_loops(2), cycle(2)), 1, "WB(2,2)");
  for (const auto& [d, g] : detail::small_regular_corpus())
    for (int k : {1, 2}) check(g, k, "regular d=" + detail::str(d) + " n=" + detail::str(g.order()));
  Rng rng(0x5eed000a);
  for (int i = 0; i < 20; ++i)
    check(random_digraph_min_degree(rng, 3 + i % 3, 2, 1, i % 2 == 0), 1, "random " + detail::str(i));
  return t.result(10, "Sandwich bound");
}

/// γ_P(L^2(G)) = Z(L(G)) for d-regular G, both by brute force.
inline CriterionResult regular_pd_identity() {
  detail::Tally t;
  const auto opt = detail::solver_options();
  for (const auto& [d, g] : detail::small_regular_corpus()) {
    const int z = min_zero_forcing(line_digraph(g).graph, opt).z;
    const int gp = min_power_dominating(iterated_line(g, 2).graph, opt).gamma_p;
    t.expect(z == gp, "d=" + detail::str(d) + " n=" + detail::str(g.order()) + ": Z(L)=" +
                          detail::str(z) + " gamma_P(L^2)=" + detail::str(gp));
  }
  return t.result(11, "Regular PD identity");
}

struct Criterion {
  int id;
  const char* suite;
  std::function<CriterionResult()> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "line-zf", line_zero_forcing_formula},
      {2, "de-bruijn", de_bruijn_suite},
      {3, "kautz", kautz_suite},
      {4, "generalized", generalized_suite},
      {5, "wrapped-butterfly", wrapped_butterfly_suite},
      {6, "gimbert", gimbert_rank},
      {7, "mz-collapse", max_nullity_equals_z},
      {8, "pd-bridge", pd_zf_bridge},
      {9, "cycle-factorization", cycle_factorization_suite},
      {10, "sandwich", sandwich_bound},
      {11, "regular-pd", regular_pd_identity},
  };
  return all;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names{"all", "families"};
  for (const auto& c : criteria()) names.push_back(c.suite);
  return names;
}

/// Runs a named suite: one criterion by name, "families" for the family
/// corollaries, or "all". Unknown names yield an empty list.
inline std::vector<CriterionResult> run_suite(const std::string& name) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    const bool family = c.id >= 2 && c.id <= 5;
    if (name == "all" || name == c.suite || (name == "families" && family)) out.push_back(c.run());
  }
  return out;
}

}  // namespace forcing_lab::verify
