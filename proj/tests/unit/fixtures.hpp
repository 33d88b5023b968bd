#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ohg/hypergraph.hpp"
#include "ohg/matrix.hpp"

namespace ohg::testing {

inline OrientedHypergraph make(std::vector<std::string> vertices, std::vector<std::string> edges,
                               std::vector<LabeledIncidence> incidences) {
  return OrientedHypergraph::from_data({std::move(vertices), std::move(edges), std::move(incidences)});
}

// v1 -e1- v2, both incidences +1.
inline OrientedHypergraph two_vertex_edge() {
  return make({"v1", "v2"}, {"e1"}, {{"v1", "e1", 1, 1}, {"v2", "e1", 1, 1}});
}

inline OrientedHypergraph three_uniform_all_plus() {
  return make({"v1", "v2", "v3"}, {"e1"},
              {{"v1", "e1", 1, 1}, {"v2", "e1", 1, 1}, {"v3", "e1", 1, 1}});
}

// One vertex meeting one edge twice, signs +1 and −1.
inline OrientedHypergraph double_incidence() {
  return make({"v1"}, {"e1"}, {{"v1", "e1", 1, 1}, {"v1", "e1", 2, -1}});
}

// v1 -e1- v2 -e2- v3 with τ(v1,e1)=+1, τ(v2,e1)=−1, τ(v2,e2)=+1, τ(v3,e2)=−1.
inline OrientedHypergraph p3_bidirected_path() {
  return make({"v1", "v2", "v3"}, {"e1", "e2"},
              {{"v1", "e1", 1, 1}, {"v2", "e1", 1, -1}, {"v2", "e2", 1, 1}, {"v3", "e2", 1, -1}});
}

inline LabeledMatrix matrix(std::vector<std::string> rows, std::vector<std::string> cols,
                            std::initializer_list<std::initializer_list<std::int64_t>> values) {
  LabeledMatrix m(std::move(rows), std::move(cols));
  std::size_t r = 0;
  for (const auto& row : values) {
    std::size_t c = 0;
    for (auto v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

}  // namespace ohg::testing
