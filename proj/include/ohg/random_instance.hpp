#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "ohg/hypergraph.hpp"

namespace ohg {

// Seeded source of randomness with platform-independent draws: the
// mt19937_64 sequence is fixed by the standard, and bounded draws use
// rejection sampling instead of the implementation-defined distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  // True with probability p.
  bool bernoulli(double p);
  Sign sign() { return uniform(0, 1) ? Sign::positive : Sign::negative; }

 private:
  std::mt19937_64 engine_;
};

// Derives an independent stream seed for (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct RandomInstanceOptions {
  std::uint64_t seed = 0;
  std::size_t n_vertices = 4;
  std::size_t n_edges = 4;
  // Edge sizes are drawn from [1, max_edge_size] unless uniform_edge_size is
  // set.
  std::size_t max_edge_size = 3;
  bool simple = true;
  // Non-simple only: probability that an incidence slot reuses a vertex
  // already placed in the same edge.
  double non_simple_rate = 0.0;
  std::optional<std::size_t> uniform_edge_size;
  // Reject edges whose vertex set repeats an earlier edge (simple only).
  bool distinct_edge_sets = false;
};

// Vertices are "v1".."vn" and edges "e1".."em"; signs are uniform on ±1.
// Deterministic in the options. ArgumentError on infeasible parameters.
OrientedHypergraph random_instance(const RandomInstanceOptions& options);

// θ drawn uniformly over the vertices of g.
SwitchingFunction random_switching(const OrientedHypergraph& g, SeededRng& rng);

// Same underlying hypergraph with fresh uniform signs.
OrientedHypergraph resign(const OrientedHypergraph& g, SeededRng& rng);

}  // namespace ohg
