#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ohg/hypergraph.hpp"
#include "ohg/matrix.hpp"

namespace ohg {

// A walk a₀, i₁, a₁, …, iₙ, aₙ. Incidences are positions into the owning
// hypergraph's incidences(); the length of the walk is n/2.
struct Walk {
  std::vector<Anchor> anchors;
  std::vector<std::size_t> incidences;
  bool weak = false;

  std::size_t half_length_numerator() const { return incidences.size(); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

struct WalkCounts {
  std::uint64_t total = 0;
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  std::int64_t signed_net = 0;

  friend bool operator==(const WalkCounts&, const WalkCounts&) = default;
};

// Ceilings for the brute-force enumerator. Walk counts grow exponentially in
// n, so both are enforced; exceeding either throws ResourceError.
struct EnumerationLimits {
  std::size_t max_incidences = 12;
  std::uint64_t max_walks = 1'000'000;
};

// (−1)^⌊n/2⌋ ∏ σ(i_h). Throws StructuralError if `w` is not a walk of g
// (alternation, containment, or the i_{2h−1} ≠ i_{2h} rule when not weak).
Sign walk_sign(const OrientedHypergraph& g, const Walk& w);

// Every walk from `from` to `to` using exactly n incidences, in lexicographic
// order of incidence sequence. Only the pairs (i_{2h−1}, i_{2h}) must differ;
// i_{2h} may equal i_{2h+1}. Weak walks drop the constraint entirely.
// Same-kind anchors need even n, mixed anchors odd n (ArgumentError).
std::vector<Walk> enumerate_walks(const OrientedHypergraph& g, Anchor from, Anchor to,
                                  std::size_t n, bool weak,
                                  const EnumerationLimits& limits = {});

WalkCounts walk_counts(const OrientedHypergraph& g, Anchor from, Anchor to, std::size_t n,
                       bool weak, const EnumerationLimits& limits = {});

// Label-based overloads; unknown labels throw ArgumentError.
std::vector<Walk> enumerate_walks(const OrientedHypergraph& g, const std::string& from,
                                  const std::string& to, std::size_t n, bool weak,
                                  const EnumerationLimits& limits = {});
WalkCounts walk_counts(const OrientedHypergraph& g, const std::string& from,
                       const std::string& to, std::size_t n, bool weak,
                       const EnumerationLimits& limits = {});

// X_{(G, rows, cols, n/2)}: entry (i, j) is w±(a_i, a_j; n/2), with the
// anchor sets in declared order.
LabeledMatrix walk_matrix(const OrientedHypergraph& g, AnchorKind rows, AnchorKind cols,
                          std::size_t n, const EnumerationLimits& limits = {});

// W_{(G, rows, cols, n/2)}: same over weak walks.
LabeledMatrix weak_walk_matrix(const OrientedHypergraph& g, AnchorKind rows, AnchorKind cols,
                               std::size_t n, const EnumerationLimits& limits = {});

// Weak 1-walks v, i, e, i, v. Equals deg(v).
std::uint64_t backstep_count(const OrientedHypergraph& g, const std::string& vertex);

}  // namespace ohg
