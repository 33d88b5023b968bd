#include "ohg/matrix_builders.hpp"

namespace ohg {

namespace {

std::vector<std::string> labels(std::span<const std::string> s) { return {s.begin(), s.end()}; }

}  // namespace

LabeledMatrix incidence_matrix(const OrientedHypergraph& g) {
  LabeledMatrix h(labels(g.vertices()), labels(g.edges()));
  for (const auto& inc : g.incidences()) h.add_to(inc.vertex, inc.edge, to_int(inc.sign));
  return h;
}

LabeledMatrix adjacency_matrix(const OrientedHypergraph& g) {
  LabeledMatrix a(labels(g.vertices()), labels(g.vertices()));
  const auto incs = g.incidences();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto members = g.incidences_at_edge(e);
    for (std::size_t p : members) {
      for (std::size_t q : members) {
        if (p == q) continue;
        a.add_to(incs[p].vertex, incs[q].vertex, -to_int(incs[p].sign * incs[q].sign));
      }
    }
  }
  return a;
}

LabeledMatrix degree_matrix(const OrientedHypergraph& g) {
  std::vector<std::int64_t> deg(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) deg[v] = static_cast<std::int64_t>(g.degree(v));
  return LabeledMatrix::diagonal(labels(g.vertices()), deg);
}

LabeledMatrix laplacian(const OrientedHypergraph& g) {
  return degree_matrix(g) - adjacency_matrix(g);
}

LabeledMatrix dual_laplacian(const OrientedHypergraph& g) {
  return laplacian(incidence_dual(g));
}

LabeledMatrix switching_matrix(const SwitchingFunction& theta,
                               const std::vector<std::string>& vertex_order) {
  std::vector<std::int64_t> diag;
  diag.reserve(vertex_order.size());
  for (const auto& v : vertex_order) {
    auto it = theta.find(v);
    if (it == theta.end()) {
      throw DomainError("switching function has no value for vertex '" + v + "'");
    }
    diag.push_back(to_int(it->second));
  }
  if (theta.size() != vertex_order.size()) {
    throw DomainError("switching function assigns labels outside the vertex order");
  }
  return LabeledMatrix::diagonal(vertex_order, diag);
}

}  // namespace ohg
