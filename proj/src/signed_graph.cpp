#include "ohg/signed_graph.hpp"

#include <set>
#include <unordered_set>

#include "ohg/matrix_builders.hpp"

namespace ohg {

OrientedSignedGraph::OrientedSignedGraph(std::vector<std::string> vertices,
                                         std::vector<SignedEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::unordered_set<std::string> labels;
  for (const auto& v : vertices_) {
    if (!labels.insert(v).second) throw ArgumentError("duplicate label '" + v + "'");
  }
  for (auto& e : edges_) {
    if (!labels.insert(e.label).second) throw ArgumentError("duplicate label '" + e.label + "'");
    if (e.first >= vertices_.size() || e.second >= vertices_.size()) {
      throw ArgumentError("edge '" + e.label + "' has an endpoint out of range");
    }
    if (e.first > e.second) {
      std::swap(e.first, e.second);
      std::swap(e.tau_first, e.tau_second);
    }
  }
}

std::vector<std::string> OrientedSignedGraph::edge_labels() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.label);
  return out;
}

bool OrientedSignedGraph::is_simple() const {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : edges_) {
    if (e.first == e.second) return false;
    if (!pairs.emplace(e.first, e.second).second) return false;
  }
  return true;
}

OrientedSignedGraph from_hypergraph(const OrientedHypergraph& g) {
  std::vector<SignedEdge> edges;
  edges.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto members = g.incidences_at_edge(e);
    if (members.size() != 2) {
      throw NotTwoUniformError("edge '" + g.edges()[e] + "' has size " +
                               std::to_string(members.size()) + ", expected 2");
    }
    // Members are in canonical order, so the first slot has the lower vertex.
    const auto& p = g.incidences()[members[0]];
    const auto& q = g.incidences()[members[1]];
    edges.push_back({g.edges()[e], p.vertex, q.vertex, p.sign, q.sign});
  }
  return OrientedSignedGraph({g.vertices().begin(), g.vertices().end()}, std::move(edges));
}

OrientedHypergraph to_hypergraph(const OrientedSignedGraph& s) {
  HypergraphData d;
  d.vertices = s.vertices();
  d.edges = s.edge_labels();
  for (const auto& e : s.edges()) {
    const auto& v = s.vertices()[e.first];
    const auto& w = s.vertices()[e.second];
    d.incidences.push_back({v, e.label, 1, to_int(e.tau_first)});
    d.incidences.push_back({w, e.label, e.first == e.second ? 2 : 1, to_int(e.tau_second)});
  }
  return OrientedHypergraph::from_data(d);
}

OrientedSignedGraph line_graph(const OrientedSignedGraph& s) {
  if (!s.is_simple()) {
    throw UnsupportedInputError("line graph requires a simple signed graph (no loops or parallel edges)");
  }
  std::vector<std::string> vertices = s.edge_labels();
  std::unordered_set<std::string> taken(vertices.begin(), vertices.end());
  taken.insert(s.vertices().begin(), s.vertices().end());

  // For each vertex of s: (edge position, τ at that vertex).
  std::vector<std::vector<std::pair<std::size_t, Sign>>> at_vertex(s.vertices().size());
  for (std::size_t i = 0; i < s.edges().size(); ++i) {
    const auto& e = s.edges()[i];
    at_vertex[e.first].emplace_back(i, e.tau_first);
    at_vertex[e.second].emplace_back(i, e.tau_second);
  }

  std::vector<SignedEdge> edges;
  for (const auto& meeting : at_vertex) {
    for (std::size_t x = 0; x < meeting.size(); ++x) {
      for (std::size_t y = x + 1; y < meeting.size(); ++y) {
        const auto [a, tau_a] = meeting[x];
        const auto [b, tau_b] = meeting[y];
        std::string label = vertices[a] + "~" + vertices[b];
        while (taken.contains(label)) label += "'";
        taken.insert(label);
        edges.push_back({std::move(label), a, b, tau_a, tau_b});
      }
    }
  }
  return OrientedSignedGraph(std::move(vertices), std::move(edges));
}

LabeledMatrix adjacency_matrix(const OrientedSignedGraph& s) {
  return adjacency_matrix(to_hypergraph(s));
}

std::vector<IdentityFailure> signed_graph_identities(const OrientedSignedGraph& s) {
  const auto g = to_hypergraph(s);
  const auto h = incidence_matrix(g);
  const auto lambda = line_graph(s);
  std::vector<IdentityFailure> failures;

  auto check = [&](std::string name, const LabeledMatrix& lhs, const LabeledMatrix& rhs) {
    if (auto diff = first_difference(lhs, rhs)) {
      failures.push_back({std::move(name), diff->description, lhs, rhs});
    }
  };
  const auto hht = h * h.transposed();
  check("H*H^T = D - A", hht, degree_matrix(g) - adjacency_matrix(g));
  check("H*H^T = L", hht, laplacian(g));
  check("H^T*H = 2I - A_line_graph", h.transposed() * h,
        2 * LabeledMatrix::identity(s.edge_labels()) - adjacency_matrix(lambda));
  return failures;
}

}  // namespace ohg
