#include "ohg/hypergraph.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

namespace ohg {

const char* to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::duplicate_vertex_label: return "duplicate_vertex_label";
    case IssueKind::duplicate_edge_label: return "duplicate_edge_label";
    case IssueKind::vertex_edge_overlap: return "vertex_edge_overlap";
    case IssueKind::undeclared_vertex: return "undeclared_vertex";
    case IssueKind::undeclared_edge: return "undeclared_edge";
    case IssueKind::invalid_sign: return "invalid_sign";
    case IssueKind::invalid_mult_index: return "invalid_mult_index";
    case IssueKind::duplicate_incidence: return "duplicate_incidence";
    case IssueKind::multiplicity_gap: return "multiplicity_gap";
  }
  return "unknown";
}

namespace {

std::string summarize(const ValidationReport& report) {
  std::string msg = "invalid oriented hypergraph:";
  for (const auto& issue : report) {
    msg += "\n  ";
    msg += issue.message;
  }
  return msg;
}

}  // namespace

InvalidHypergraphError::InvalidHypergraphError(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

ValidationReport validate(const HypergraphData& data) {
  ValidationReport report;

  std::unordered_set<std::string> vertex_set;
  for (const auto& v : data.vertices) {
    if (!vertex_set.insert(v).second) {
      report.push_back({IssueKind::duplicate_vertex_label,
                        "vertex label '" + v + "' declared more than once", {v}, {}});
    }
  }
  std::unordered_set<std::string> edge_set;
  for (const auto& e : data.edges) {
    if (!edge_set.insert(e).second) {
      report.push_back({IssueKind::duplicate_edge_label,
                        "edge label '" + e + "' declared more than once", {e}, {}});
    }
    if (vertex_set.contains(e)) {
      report.push_back({IssueKind::vertex_edge_overlap,
                        "label '" + e + "' is both a vertex and an edge", {e}, {}});
    }
  }

  // (vertex, edge) -> multiplicity indices seen
  std::map<std::pair<std::string, std::string>, std::vector<std::int64_t>> seen;
  for (std::size_t i = 0; i < data.incidences.size(); ++i) {
    const auto& inc = data.incidences[i];
    const std::string where = "incidences[" + std::to_string(i) + "]: ";
    bool ok = true;
    if (!vertex_set.contains(inc.vertex)) {
      report.push_back({IssueKind::undeclared_vertex,
                        where + "vertex '" + inc.vertex + "' is not declared", {inc.vertex}, i});
      ok = false;
    }
    if (!edge_set.contains(inc.edge)) {
      report.push_back({IssueKind::undeclared_edge,
                        where + "edge '" + inc.edge + "' is not declared", {inc.edge}, i});
      ok = false;
    }
    if (inc.sign != 1 && inc.sign != -1) {
      report.push_back({IssueKind::invalid_sign,
                        where + "sign must be +1 or -1, got " + std::to_string(inc.sign),
                        {inc.vertex, inc.edge}, i});
    }
    if (inc.mult_index < 1 || inc.mult_index > UINT32_MAX) {
      report.push_back({IssueKind::invalid_mult_index,
                        where + "multiplicity index must be >= 1, got " +
                            std::to_string(inc.mult_index),
                        {inc.vertex, inc.edge}, i});
      ok = false;
    }
    if (ok) seen[{inc.vertex, inc.edge}].push_back(inc.mult_index);
  }

  for (auto& [pair, ks] : seen) {
    const auto& [v, e] = pair;
    std::sort(ks.begin(), ks.end());
    for (std::size_t j = 1; j < ks.size(); ++j) {
      if (ks[j] == ks[j - 1]) {
        report.push_back({IssueKind::duplicate_incidence,
                          "duplicate incidence (" + v + ", " + e + ", " +
                              std::to_string(ks[j]) + ")",
                          {v, e}, {}});
      }
    }
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (std::size_t j = 0; j < ks.size(); ++j) {
      if (ks[j] != static_cast<std::int64_t>(j + 1)) {
        report.push_back({IssueKind::multiplicity_gap,
                          "multiplicity gap for (" + v + ", " + e + "): index " +
                              std::to_string(j + 1) + " missing",
                          {v, e}, {}});
        break;
      }
    }
  }
  return report;
}

OrientedHypergraph::OrientedHypergraph(std::vector<std::string> vertices,
                                       std::vector<std::string> edges,
                                       std::vector<Incidence> incidences)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      incidences_(std::move(incidences)),
      by_vertex_(vertices_.size()),
      by_edge_(edges_.size()) {
  std::sort(incidences_.begin(), incidences_.end(), [](const Incidence& a, const Incidence& b) {
    return std::tie(a.vertex, a.edge, a.mult_index) < std::tie(b.vertex, b.edge, b.mult_index);
  });
  for (std::size_t i = 0; i < incidences_.size(); ++i) {
    by_vertex_[incidences_[i].vertex].push_back(i);
    by_edge_[incidences_[i].edge].push_back(i);
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_.emplace(vertices_[i], i);
  for (std::size_t i = 0; i < edges_.size(); ++i) edge_index_.emplace(edges_[i], i);
}

OrientedHypergraph OrientedHypergraph::from_data(const HypergraphData& data) {
  if (auto report = validate(data); !report.empty()) {
    throw InvalidHypergraphError(std::move(report));
  }
  std::unordered_map<std::string, std::size_t> vi, ei;
  for (std::size_t i = 0; i < data.vertices.size(); ++i) vi.emplace(data.vertices[i], i);
  for (std::size_t i = 0; i < data.edges.size(); ++i) ei.emplace(data.edges[i], i);
  std::vector<Incidence> incs;
  incs.reserve(data.incidences.size());
  for (const auto& li : data.incidences) {
    incs.push_back({vi.at(li.vertex), ei.at(li.edge), static_cast<std::uint32_t>(li.mult_index),
                    li.sign > 0 ? Sign::positive : Sign::negative});
  }
  return OrientedHypergraph(data.vertices, data.edges, std::move(incs));
}

HypergraphData OrientedHypergraph::to_data() const {
  HypergraphData d{vertices_, edges_, {}};
  d.incidences.reserve(incidences_.size());
  for (const auto& inc : incidences_) {
    d.incidences.push_back({vertices_[inc.vertex], edges_[inc.edge], inc.mult_index,
                            to_int(inc.sign)});
  }
  return d;
}

std::optional<std::size_t> OrientedHypergraph::find_vertex(const std::string& label) const {
  if (auto it = vertex_index_.find(label); it != vertex_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> OrientedHypergraph::find_edge(const std::string& label) const {
  if (auto it = edge_index_.find(label); it != edge_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<Anchor> OrientedHypergraph::find_anchor(const std::string& label) const {
  if (auto v = find_vertex(label)) return Anchor{AnchorKind::vertex, *v};
  if (auto e = find_edge(label)) return Anchor{AnchorKind::edge, *e};
  return std::nullopt;
}

const std::string& OrientedHypergraph::label(Anchor a) const {
  return a.kind == AnchorKind::vertex ? vertices_.at(a.index) : edges_.at(a.index);
}

Anchor OrientedHypergraph::across(std::size_t i, Anchor from) const {
  const auto& inc = incidences_[i];
  return from.kind == AnchorKind::vertex ? Anchor{AnchorKind::edge, inc.edge}
                                         : Anchor{AnchorKind::vertex, inc.vertex};
}

bool OrientedHypergraph::contains(std::size_t i, Anchor a) const {
  if (i >= incidences_.size()) return false;
  const auto& inc = incidences_[i];
  return a.kind == AnchorKind::vertex ? inc.vertex == a.index : inc.edge == a.index;
}

bool is_simple(const OrientedHypergraph& g) {
  return std::ranges::all_of(g.incidences(), [](const Incidence& i) { return i.mult_index == 1; });
}

bool is_k_uniform(const OrientedHypergraph& g, std::size_t k) {
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.edge_size(e) != k) return false;
  }
  return true;
}

bool is_k_regular(const OrientedHypergraph& g, std::size_t k) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

OrientedHypergraph incidence_dual(const OrientedHypergraph& g) {
  std::vector<Incidence> incs;
  incs.reserve(g.incidences_.size());
  for (const auto& inc : g.incidences_) {
    incs.push_back({inc.edge, inc.vertex, inc.mult_index, inc.sign});
  }
  return OrientedHypergraph(g.edges_, g.vertices_, std::move(incs));
}

OrientedHypergraph switch_vertices(const OrientedHypergraph& g, const SwitchingFunction& theta) {
  std::vector<Sign> by_vertex(g.vertex_count(), Sign::positive);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto it = theta.find(g.vertices_[v]);
    if (it == theta.end()) {
      throw DomainError("switching function has no value for vertex '" + g.vertices_[v] + "'");
    }
    by_vertex[v] = it->second;
  }
  for (const auto& [label, s] : theta) {
    if (!g.find_vertex(label)) {
      throw DomainError("switching function assigns '" + label + "', which is not a vertex");
    }
  }
  OrientedHypergraph out = g;
  for (auto& inc : out.incidences_) inc.sign = by_vertex[inc.vertex] * inc.sign;
  return out;
}

}  // namespace ohg
