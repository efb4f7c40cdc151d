#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "forcing_lab/digraph.hpp"
#include "forcing_lab/exact_rank.hpp"
#include "forcing_lab/line.hpp"
#include "forcing_lab/propagation.hpp"

namespace forcing_lab {

using Json = nlohmann::ordered_json;

/// A digraph as exchanged on disk: {"n", "arcs", optional "name",
/// optional "labels"}.
struct DigraphDocument {
  Digraph graph;
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> labels;

  /// Vertex id carrying this label, or -1.
  Vertex find_label(const std::string& label) const {
    if (!labels) return -1;
    for (std::size_t i = 0; i < labels->size(); ++i)
      if ((*labels)[i] == label) return static_cast<Vertex>(i);
    return -1;
  }
};

inline Json to_json(const Digraph& g, const std::optional<std::string>& name = std::nullopt,
                    const std::optional<std::vector<std::string>>& labels = std::nullopt) {
  Json j;
  j["n"] = g.order();
  Json arcs = Json::array();
  for (const auto& [u, v] : g.arcs()) arcs.push_back({u, v});  // already sorted
  j["arcs"] = std::move(arcs);
  if (name) j["name"] = *name;
  if (labels) j["labels"] = *labels;
  return j;
}

inline Json to_json(const DigraphDocument& doc) { return to_json(doc.graph, doc.name, doc.labels); }

inline Json to_json(const LineLabeledDigraph& h, const std::optional<std::string>& name = std::nullopt) {
  return to_json(h.graph, name, h.label_strings());
}

inline DigraphDocument digraph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    throw DomainError("digraph JSON needs fields \"n\" and \"arcs\"");
  if (!j["n"].is_number_integer()) throw DomainError("\"n\" must be an integer");
  const int n = j["n"].get<int>();
  std::vector<Arc> arcs;
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
      throw DomainError("each arc must be a pair of integers");
    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  DigraphDocument doc{Digraph(n, std::move(arcs)), std::nullopt, std::nullopt};
  if (j.contains("name")) doc.name = j["name"].get<std::string>();
  if (j.contains("labels")) {
    auto labels = j["labels"].get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != n) throw DomainError("\"labels\" must have n entries");
    doc.labels = std::move(labels);
  }
  return doc;
}

inline DigraphDocument read_digraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(path + ": " + e.what());
  }
  return digraph_from_json(j);
}

/// DOT text: one `u -> v;` line per arc, loops included.
inline std::string to_dot(const Digraph& g, const std::string& name = "G",
                          const std::optional<std::vector<std::string>>& labels = std::nullopt) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v;
    if (labels) os << " [label=\"" << (*labels)[v] << "\"]";
    os << ";\n";
  }
  for (const auto& [u, v] : g.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

inline Json to_json(const VertexSet& s) { return Json(s.members()); }

inline Json to_json(const PropagationTrace& t) {
  Json j;
  j["mode"] = mode_name(t.mode);
  j["initial"] = to_json(t.initial);
  Json rounds = Json::array();
  for (const auto& r : t.rounds) rounds.push_back(to_json(r));
  j["rounds"] = std::move(rounds);
  Json cert = Json::array();
  for (const auto& f : t.certificate) cert.push_back({f.forcer, f.forced, f.round});
  j["certificate"] = std::move(cert);
  j["covers_all"] = t.covers_all;
  return j;
}

/// Walk labels of the members of a witness set.
inline Json witness_labels(const LineLabeledDigraph& h, const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s.members()) out.push_back(LineLabeledDigraph::walk_string(h.labels[v]));
  return out;
}

inline Json to_json(const ExactMatrix& m) { return Json(m.to_strings()); }

}  // namespace forcing_lab
