#pragma once

#include <string>
#include <vector>

#include "ohg/hypergraph.hpp"
#include "ohg/matrix.hpp"

namespace ohg {

// One edge of an oriented signed graph with its two endpoint slots. τ values
// are stored per slot; a loop has first == second and two slots at the same
// vertex.
struct SignedEdge {
  std::string label;
  std::size_t first = 0;   // vertex position
  std::size_t second = 0;  // vertex position, >= first
  Sign tau_first = Sign::positive;
  Sign tau_second = Sign::positive;

  // sgn(e) = −τ(v,e)τ(w,e)
  Sign sign() const { return -(tau_first * tau_second); }

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// (Σ, τ) with Σ = (Γ, sgn). The signature is derived from τ, so the
// orientation-consistency invariant holds by construction.
class OrientedSignedGraph {
 public:
  OrientedSignedGraph() = default;
  // Endpoints are reordered so first <= second. Throws ArgumentError on
  // out-of-range endpoints or duplicate labels.
  OrientedSignedGraph(std::vector<std::string> vertices, std::vector<SignedEdge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<SignedEdge>& edges() const { return edges_; }

  std::vector<std::string> edge_labels() const;

  // No loops and no two edges on the same endpoint pair.
  bool is_simple() const;

  friend bool operator==(const OrientedSignedGraph&, const OrientedSignedGraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<SignedEdge> edges_;
};

// Requires every edge of g to have size 2 (NotTwoUniformError naming the
// first offender).
OrientedSignedGraph from_hypergraph(const OrientedHypergraph& g);

// Each edge becomes two incidences with σ = τ; a loop becomes (v,e,1) and
// (v,e,2).
OrientedHypergraph to_hypergraph(const OrientedSignedGraph& s);

// (Λ(Γ), τ_Λ): one vertex per edge of s; for every vertex v_j and pair of
// edges e_a, e_b (a < b) meeting there, an edge "e_a~e_b" with
// τ_Λ(e_a, ·) = τ(v_j, e_a) and τ_Λ(e_b, ·) = τ(v_j, e_b). Requires s simple
// (UnsupportedInputError).
OrientedSignedGraph line_graph(const OrientedSignedGraph& s);

LabeledMatrix adjacency_matrix(const OrientedSignedGraph& s);

struct IdentityFailure {
  std::string identity;
  std::string detail;
  LabeledMatrix lhs;
  LabeledMatrix rhs;
};

// Checks H·Hᵀ = D − A = L and Hᵀ·H = 2I − A_Λ for G = to_hypergraph(s).
// Empty when both hold.
std::vector<IdentityFailure> signed_graph_identities(const OrientedSignedGraph& s);

}  // namespace ohg
