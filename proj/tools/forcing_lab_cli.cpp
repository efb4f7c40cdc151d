// forcing-lab: command-line front end. Machine output on stdout is a single
// JSON document; human-readable summaries go to stderr.
//
// Exit codes: 0 success, 1 property check failed, 2 usage or domain error,
// 3 resource limit exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "forcing_lab/forcing_lab.hpp"
#include "forcing_lab/verify.hpp"

namespace fl = forcing_lab;
using fl::Json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

void emit(const Json& j, const std::string& out_path = "") {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw fl::DomainError("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

/// Comma-separated vertex ids or walk labels.
fl::VertexSet parse_set(const fl::DigraphDocument& doc, const std::string& csv) {
  fl::VertexSet s(doc.graph.order());
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    fl::Vertex v = doc.find_label(tok);
    if (v < 0) {
      std::size_t used = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw fl::DomainError("unknown vertex '" + tok + "'");
    }
    s.insert(v);
  }
  return s;
}

Json labelled_set(const fl::DigraphDocument& doc, const fl::VertexSet& s) {
  Json j;
  j["ids"] = fl::to_json(s);
  if (doc.labels) {
    Json l = Json::array();
    for (fl::Vertex v : s.members()) l.push_back((*doc.labels)[v]);
    j["labels"] = std::move(l);
  }
  return j;
}

fl::SolverOptions solver_options(int jobs) {
  fl::SolverOptions o;
  o.limits.jobs = jobs;
  return o;
}

struct Args {
  std::string family, input, input_b, output, set, action, suite;
  int d = 0, D = 0, n = 0, iterate = 1, target = 0, jobs = 1, line_depth = 0;
  bool cycles = false, good = false, matrix = false;
};

int cmd_gen(const Args& a) {
  const auto fam = fl::parse_family(a.family);
  if (!fam) throw fl::DomainError("unknown family '" + a.family + "'");
  fl::FamilySpec spec{*fam, a.d, 0};
  switch (*fam) {
    case fl::Family::de_bruijn:
    case fl::Family::kautz: spec.size = a.D; break;
    case fl::Family::complete_loops:
    case fl::Family::complete_noloops: spec.d = a.d > 0 ? a.d : a.n; break;
    default: spec.size = a.n; break;
  }
  if (*fam == fl::Family::kautz && !fl::kautz_in_formula_range(a.d))
    std::cerr << "note: Kautz closed forms are stated for d >= 3\n";
  const fl::Digraph g = fl::make_family(spec);
  std::cerr << fl::family_name(spec) << ": " << g.order() << " vertices, " << g.arc_count() << " arcs\n";
  emit(fl::to_json(g, fl::family_name(spec)), a.output);
  return kOk;
}

int cmd_line(const Args& a) {
  const auto doc = fl::read_digraph(a.input);
  const auto h = fl::iterated_line(doc.graph, a.iterate);
  std::cerr << "L^" << a.iterate << ": " << h.graph.order() << " vertices, " << h.graph.arc_count()
            << " arcs\n";
  const std::string name = "L^" + std::to_string(a.iterate) + "(" + doc.name.value_or("G") + ")";
  emit(fl::to_json(h, name), a.output);
  return kOk;
}

int cmd_zf(const Args& a) {
  const auto doc = fl::read_digraph(a.input);
  const fl::Digraph& g = doc.graph;
  if (a.action == "closure" || a.action == "check") {
    const auto t = fl::zf_closure(g, parse_set(doc, a.set));
    if (a.action == "closure") {
      emit(fl::to_json(t));
      return kOk;
    }
    std::cerr << (t.covers_all ? "zero forcing set\n" : "not a zero forcing set\n");
    emit({{"zero_forcing", t.covers_all}});
    return t.covers_all ? kOk : kCheckFailed;
  }
  if (a.action == "min") {
    const auto r = fl::min_zero_forcing(g, solver_options(a.jobs));
    std::cerr << "Z = " << r.z << "\n";
    emit({{"Z", r.z}, {"witness", labelled_set(doc, r.witness)}});
    return kOk;
  }
  // construct: the minimum zero forcing set of L(G) built from G.
  const auto w = fl::construct_zfs_line(g);
  std::cerr << "zero forcing set of L(G) with " << w.set.size() << " vertices\n";
  emit({{"size", w.set.size()},
        {"witness", fl::witness_labels(w.host, w.set)},
        {"line_digraph", fl::to_json(w.host)}});
  return kOk;
}

int cmd_pd(const Args& a) {
  const auto doc = fl::read_digraph(a.input);
  const fl::Digraph& g = doc.graph;
  if (a.action == "closure" || a.action == "check") {
    const auto t = fl::pd_closure(g, parse_set(doc, a.set));
    if (a.action == "closure") {
      emit(fl::to_json(t));
      return kOk;
    }
    std::cerr << (t.covers_all ? "power dominating set\n" : "not a power dominating set\n");
    emit({{"power_dominating", t.covers_all}});
    return t.covers_all ? kOk : kCheckFailed;
  }
  if (a.action == "min") {
    const auto r = fl::min_power_dominating(g, solver_options(a.jobs));
    std::cerr << "gamma_P = " << r.gamma_p << "\n";
    emit({{"gamma_P", r.gamma_p}, {"witness", labelled_set(doc, r.witness)}});
    return kOk;
  }
  if (a.action == "construct-l2") {
    const auto f = fl::one_factor(g, true);
    if (!f.factor) {
      std::cerr << "no 1-factor with an in-degree > 1 vertex on every cycle\n";
      emit({{"factor", nullptr}});
      return kCheckFailed;
    }
    const auto w = fl::construct_pds_L2(g, *f.factor);
    std::cerr << "power dominating set of L^2(G) with " << w.set.size() << " vertices\n";
    emit({{"size", w.set.size()},
          {"factor", f.factor->f},
          {"witness", fl::witness_labels(w.host, w.set)},
          {"line_digraph", fl::to_json(w.host)}});
    return kOk;
  }
  // construct-l: needs a set with disjoint out-neighbourhoods, given or found.
  std::optional<fl::VertexSet> s;
  if (!a.set.empty()) {
    s = parse_set(doc, a.set);
  } else {
    const int start = a.target > 0 ? a.target : g.order() / std::max(1, fl::degrees(g).max_out);
    for (int t = start; t >= 1 && !s; --t) {
      s = fl::find_disjoint_outneighborhood_set(g, t);
      if (a.target > 0) break;
    }
  }
  if (!s) {
    std::cerr << "no set with disjoint out-neighbourhoods of the requested size\n";
    emit({{"set", nullptr}});
    return kCheckFailed;
  }
  const auto w = fl::construct_pds_L(g, *s);
  std::cerr << "power dominating set of L(G) with " << w.set.size() << " vertices\n";
  emit({{"size", w.set.size()},
        {"set", labelled_set(doc, *s)},
        {"witness", fl::witness_labels(w.host, w.set)},
        {"line_digraph", fl::to_json(w.host)}});
  return kOk;
}

int cmd_rank(const Args& a) {
  const auto doc = fl::read_digraph(a.input);
  Json j;
  if (a.line_depth > 0) {
    const auto rep = fl::mr_and_M_regular_line(doc.graph, a.line_depth);
    j = {{"d", rep.d},
         {"depth", rep.depth},
         {"order", rep.order},
         {"adjacency_rank", rep.adjacency_rank},
         {"adjacency_nullity", rep.adjacency_nullity},
         {"Z_formula", rep.z_formula},
         {"rank_check", rep.rank_check},
         {"M_interval", {rep.m_lower, rep.m_upper}},
         {"mr", rep.min_rank ? Json(*rep.min_rank) : Json(nullptr)},
         {"M", rep.max_nullity ? Json(*rep.max_nullity) : Json(nullptr)}};
    std::cerr << "L^" << rep.depth << ": rank " << rep.adjacency_rank << ", nullity "
              << rep.adjacency_nullity << ", Z " << rep.z_formula << "\n";
  } else {
    const auto m = fl::adjacency_matrix(doc.graph);
    const auto r = fl::rank_exact(m);
    j = {{"order", doc.graph.order()}, {"rank", r.rank}, {"nullity", r.nullity}};
    if (a.matrix) j["matrix"] = fl::to_json(m);
    std::cerr << "rank " << r.rank << ", nullity " << r.nullity << "\n";
  }
  emit(j);
  return kOk;
}

int cmd_factor(const Args& a) {
  const auto doc = fl::read_digraph(a.input);
  const fl::Digraph& g = doc.graph;
  auto factor_json = [](const fl::OneFactor& f) {
    return Json{{"f", f.f}, {"cycles", f.cycles()}};
  };
  if (a.cycles) {
    const auto fs = fl::cycle_factorization(g);
    Json arr = Json::array();
    for (const auto& f : fs) arr.push_back(factor_json(f));
    std::cerr << fs.size() << " 1-factors\n";
    emit({{"factors", std::move(arr)}});
    return kOk;
  }
  const auto r = fl::one_factor(g, a.good);
  if (!r.factor) {
    std::cerr << "no 1-factor\n";
    emit({{"factor", nullptr}});
    return kCheckFailed;
  }
  emit({{"factor", factor_json(*r.factor)}});
  return kOk;
}

int cmd_iso(const Args& a) {
  const auto g = fl::read_digraph(a.input);
  const auto h = fl::read_digraph(a.input_b);
  const auto phi = fl::are_isomorphic(g.graph, h.graph);
  if (!phi) {
    std::cerr << "not isomorphic\n";
    emit({{"isomorphic", false}});
    return kCheckFailed;
  }
  std::cerr << "isomorphic\n";
  emit({{"isomorphic", true}, {"bijection", *phi}});
  return kOk;
}

int cmd_verify(const Args& a) {
  const auto results = fl::verify::run_suite(a.suite);
  if (results.empty()) throw fl::DomainError("unknown suite '" + a.suite + "'");
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    std::cerr << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail << "\n";
    arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  emit({{"suite", a.suite}, {"passed", all}, {"criteria", std::move(arr)}});
  return all ? kOk : kCheckFailed;
}

int cmd_export_dot(const Args& a) {
  const auto doc = fl::read_digraph(a.input);
  const std::string dot = fl::to_dot(doc.graph, doc.name.value_or("G"), doc.labels);
  if (a.output.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(a.output);
    if (!out) throw fl::DomainError("cannot write " + a.output);
    out << dot;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero forcing, power domination and minimum rank of (iterated line) digraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--jobs", a.jobs, "Worker threads for the exhaustive solvers")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Emit a family digraph as JSON");
  gen->add_option("family", a.family, "de-bruijn|kautz|gen-de-bruijn|gen-kautz|wrapped-butterfly|"
                                      "complete-loops|complete-noloops|cycle")
      ->required();
  gen->add_option("--d", a.d, "Degree parameter");
  gen->add_option("--D", a.D, "Diameter parameter (de Bruijn, Kautz)");
  gen->add_option("--n", a.n, "Order/length parameter");
  gen->add_option("-o,--output", a.output, "Output file");

  auto* line = app.add_subcommand("line", "Apply the line operator k times, with walk labels");
  line->add_option("input", a.input)->required();
  line->add_option("--iterate", a.iterate, "Number of iterations")->check(CLI::NonNegativeNumber);
  line->add_option("-o,--output", a.output, "Output file");

  auto* zf = app.add_subcommand("zf", "Zero forcing");
  zf->add_option("action", a.action)->required()->check(CLI::IsMember({"closure", "check", "min", "construct"}));
  zf->add_option("input", a.input)->required();
  zf->add_option("--set", a.set, "Comma-separated vertex ids or labels");

  auto* pd = app.add_subcommand("pd", "Power domination");
  pd->add_option("action", a.action)
      ->required()
      ->check(CLI::IsMember({"closure", "check", "min", "construct-l2", "construct-l"}));
  pd->add_option("input", a.input)->required();
  pd->add_option("--set", a.set, "Comma-separated vertex ids or labels");
  pd->add_option("--target", a.target, "Size of the disjoint out-neighbourhood set (construct-l)");

  auto* rank = app.add_subcommand("rank", "Exact adjacency rank and nullity");
  rank->add_option("input", a.input)->required();
  rank->add_option("--line-depth", a.line_depth, "Report mr/M of L^k(G) for regular G");
  rank->add_flag("--matrix", a.matrix, "Include the adjacency matrix");

  auto* factor = app.add_subcommand("factor", "1-factor or cycle factorization");
  factor->add_option("input", a.input)->required();
  factor->add_flag("--cycles", a.cycles, "Full cycle factorization of a regular digraph");
  factor->add_flag("--good", a.good, "Require an in-degree > 1 vertex on every factor cycle");

  auto* iso = app.add_subcommand("iso", "Isomorphism certificate");
  iso->add_option("a", a.input)->required();
  iso->add_option("b", a.input_b)->required();

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", a.suite)->required();

  auto* dot = app.add_subcommand("export-dot", "Graphviz export");
  dot->add_option("input", a.input)->required();
  dot->add_option("-o,--output", a.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(a);
    if (line->parsed()) return cmd_line(a);
    if (zf->parsed()) return cmd_zf(a);
    if (pd->parsed()) return cmd_pd(a);
    if (rank->parsed()) return cmd_rank(a);
    if (factor->parsed()) return cmd_factor(a);
    if (iso->parsed()) return cmd_iso(a);
    if (verify->parsed()) return cmd_verify(a);
    if (dot->parsed()) return cmd_export_dot(a);
  } catch (const fl::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const fl::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
