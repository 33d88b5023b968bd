#pragma once

#include <vector>
#include <string>

#include "ohg/hypergraph.hpp"
#include "ohg/matrix.hpp"

namespace ohg {

// H_G, n×m: η_ij is the sum of σ over all incidences of (v_i, e_j).
LabeledMatrix incidence_matrix(const OrientedHypergraph& g);

// A_G, n×n: a_ij sums sgn_e = −σ(p)σ(q) over ordered pairs of distinct
// incidences p at v_i and q at v_j sharing an edge. On simple G this is the
// usual Σ_e sgn_e(v_i, v_j); on non-simple G it equals the signed count of
// 1-walks, w±(v_i, v_j; 1).
LabeledMatrix adjacency_matrix(const OrientedHypergraph& g);

LabeledMatrix degree_matrix(const OrientedHypergraph& g);

// D_G − A_G.
LabeledMatrix laplacian(const OrientedHypergraph& g);

// laplacian(incidence_dual(g)).
LabeledMatrix dual_laplacian(const OrientedHypergraph& g);

// D(θ) = diag(θ(v_i)) over `vertex_order`. θ must cover exactly those labels.
LabeledMatrix switching_matrix(const SwitchingFunction& theta,
                               const std::vector<std::string>& vertex_order);

}  // namespace ohg
