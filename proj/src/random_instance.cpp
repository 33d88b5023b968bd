#include "ohg/random_instance.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ohg {

std::uint64_t SeededRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw ArgumentError("uniform: empty range");
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return engine_();
  const std::uint64_t range = span + 1;
  // 2^64 mod range; rejecting below it leaves a multiple of range outcomes.
  const std::uint64_t threshold = (0 - range) % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return lo + x % range;
}

bool SeededRng::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

OrientedHypergraph random_instance(const RandomInstanceOptions& o) {
  const std::size_t lo_size = o.uniform_edge_size.value_or(1);
  const std::size_t hi_size = o.uniform_edge_size.value_or(o.max_edge_size);
  if (o.n_edges > 0 && o.n_vertices == 0) {
    throw ArgumentError("edges need at least one vertex");
  }
  if (hi_size == 0 && o.n_edges > 0) throw ArgumentError("edge size must be positive");
  if (o.simple && o.n_edges > 0 && hi_size > o.n_vertices) {
    throw ArgumentError("a simple instance cannot have edges larger than the vertex count");
  }
  if (o.non_simple_rate < 0.0 || o.non_simple_rate > 1.0) {
    throw ArgumentError("non_simple_rate must lie in [0, 1]");
  }
  if (o.distinct_edge_sets && !o.simple) {
    throw ArgumentError("distinct_edge_sets requires simple instances");
  }
  if (o.distinct_edge_sets && o.uniform_edge_size) {
    // C(n, k) distinct k-sets must cover the requested edges.
    long double sets = 1;
    for (std::size_t i = 0; i < *o.uniform_edge_size; ++i) {
      sets = sets * static_cast<long double>(o.n_vertices - i) / static_cast<long double>(i + 1);
    }
    if (sets < static_cast<long double>(o.n_edges)) {
      throw ArgumentError("not enough distinct vertex sets for the requested edges");
    }
  }

  SeededRng rng(o.seed);
  HypergraphData d;
  for (std::size_t i = 1; i <= o.n_vertices; ++i) d.vertices.push_back("v" + std::to_string(i));
  for (std::size_t i = 1; i <= o.n_edges; ++i) d.edges.push_back("e" + std::to_string(i));

  std::set<std::vector<std::size_t>> used_sets;
  for (std::size_t e = 0; e < o.n_edges; ++e) {
    std::vector<std::size_t> members;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 10000) throw ArgumentError("could not draw distinct edge vertex sets");
      const std::size_t size = rng.uniform(lo_size, hi_size);
      members.clear();
      std::vector<std::size_t> pool(o.n_vertices);
      for (std::size_t v = 0; v < o.n_vertices; ++v) pool[v] = v;
      for (std::size_t slot = 0; slot < size; ++slot) {
        const bool reuse = !o.simple && !members.empty() &&
                           (pool.empty() || rng.bernoulli(o.non_simple_rate));
        if (reuse) {
          members.push_back(members[rng.uniform(0, members.size() - 1)]);
        } else {
          const std::size_t pick = rng.uniform(0, pool.size() - 1);
          members.push_back(pool[pick]);
          pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
      }
      if (!o.distinct_edge_sets) break;
      auto key = members;
      std::sort(key.begin(), key.end());
      if (used_sets.insert(key).second) break;
    }
    std::map<std::size_t, std::int64_t> next_k;
    for (std::size_t v : members) {
      d.incidences.push_back({d.vertices[v], d.edges[e], ++next_k[v], to_int(rng.sign())});
    }
  }
  return OrientedHypergraph::from_data(d);
}

SwitchingFunction random_switching(const OrientedHypergraph& g, SeededRng& rng) {
  SwitchingFunction theta;
  for (const auto& v : g.vertices()) theta.emplace(v, rng.sign());
  return theta;
}

OrientedHypergraph resign(const OrientedHypergraph& g, SeededRng& rng) {
  auto d = g.to_data();
  for (auto& inc : d.incidences) inc.sign = to_int(rng.sign());
  return OrientedHypergraph::from_data(d);
}

}  // namespace ohg
