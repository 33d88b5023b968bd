#include "doctest.h"
#include "unit/fixtures.hpp"

#include <climits>

#include "ohg/matrix_builders.hpp"

using namespace ohg;
using namespace ohg::testing;

TEST_CASE("incidence matrix sums signs over multiplicities") {
  CHECK(incidence_matrix(two_vertex_edge()) == matrix({"v1", "v2"}, {"e1"}, {{1}, {1}}));
  CHECK(incidence_matrix(double_incidence())(0, 0) == 0);
  CHECK(incidence_matrix(incidence_dual(p3_bidirected_path())) ==
        incidence_matrix(p3_bidirected_path()).transposed());
}

TEST_CASE("adjacency matrix") {
  CHECK(adjacency_matrix(two_vertex_edge()) == matrix({"v1", "v2"}, {"v1", "v2"}, {{0, -1}, {-1, 0}}));
  CHECK(adjacency_matrix(three_uniform_all_plus()) ==
        matrix({"v1", "v2", "v3"}, {"v1", "v2", "v3"}, {{0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}}));
  // Two ordered self-adjacencies, each −(+1)(+1).
  const auto g = make({"v1"}, {"e1"}, {{"v1", "e1", 1, 1}, {"v1", "e1", 2, 1}});
  CHECK(adjacency_matrix(g)(0, 0) == -2);
}

TEST_CASE("degree matrix") {
  CHECK(degree_matrix(two_vertex_edge()) == matrix({"v1", "v2"}, {"v1", "v2"}, {{1, 0}, {0, 1}}));
  CHECK(degree_matrix(double_incidence()) == matrix({"v1"}, {"v1"}, {{2}}));
  const auto isolated = make({"v1", "v2"}, {"e1"}, {{"v1", "e1", 1, 1}});
  CHECK(degree_matrix(isolated)(1, 1) == 0);
}

TEST_CASE("laplacian and dual laplacian") {
  const auto g = two_vertex_edge();
  CHECK(laplacian(g) == matrix({"v1", "v2"}, {"v1", "v2"}, {{1, 1}, {1, 1}}));
  CHECK(laplacian(three_uniform_all_plus()) ==
        matrix({"v1", "v2", "v3"}, {"v1", "v2", "v3"}, {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  const auto h = incidence_matrix(g);
  CHECK(laplacian(g) == h * h.transposed());
  CHECK(dual_laplacian(g) == matrix({"e1"}, {"e1"}, {{2}}));
  CHECK(dual_laplacian(three_uniform_all_plus()) == matrix({"e1"}, {"e1"}, {{3}}));

  const auto t = three_uniform_all_plus();
  const auto ht = incidence_matrix(t);
  CHECK(ht.transposed() * ht ==
        3 * LabeledMatrix::identity({"e1"}) - adjacency_matrix(incidence_dual(t)));
}

TEST_CASE("switching matrix") {
  SwitchingFunction plus{{"v1", Sign::positive}, {"v2", Sign::positive}};
  CHECK(switching_matrix(plus, {"v1", "v2"}) == LabeledMatrix::identity({"v1", "v2"}));
  SwitchingFunction theta{{"v1", Sign::negative}, {"v2", Sign::positive}};
  const auto d = switching_matrix(theta, {"v1", "v2"});
  CHECK(d == matrix({"v1", "v2"}, {"v1", "v2"}, {{-1, 0}, {0, 1}}));
  CHECK(d * d == LabeledMatrix::identity({"v1", "v2"}));
  CHECK_THROWS_AS(switching_matrix(theta, {"v1", "v2", "v3"}), DomainError);
}

TEST_CASE("matrix arithmetic enforces labels") {
  const auto a = LabeledMatrix::identity({"a", "b"});
  const auto b = LabeledMatrix::identity({"x", "y"});
  CHECK_THROWS_AS(a * b, ArgumentError);
  CHECK_THROWS_AS(a + b, ArgumentError);
  CHECK_THROWS_AS(LabeledMatrix({"a", "a"}, {}), ArgumentError);
  CHECK(power(a, 0) == a);
  const auto diff = first_difference(a, 2 * a);
  REQUIRE(diff);
  CHECK(diff->row == 0u);
  CHECK(diff->col == 0u);
  CHECK_FALSE(first_difference(a, a));
}

TEST_CASE("overflow is reported, not wrapped") {
  auto m = LabeledMatrix::identity({"a"});
  m(0, 0) = INT64_MAX / 2 + 1;
  CHECK_THROWS_AS(m + m, OverflowError);
  CHECK_THROWS_AS(m * m, OverflowError);
  CHECK_THROWS_AS(power(m, 3), OverflowError);
}

TEST_CASE("empty hypergraph gives empty matrices") {
  const OrientedHypergraph g;
  CHECK(incidence_matrix(g).rows() == 0);
  CHECK(laplacian(g).entries().empty());
  const auto edgeless = make({"v1"}, {}, {});
  CHECK(incidence_matrix(edgeless).rows() == 1);
  CHECK(incidence_matrix(edgeless).cols() == 0);
  CHECK(laplacian(edgeless) == matrix({"v1"}, {"v1"}, {{0}}));
}

TEST_CASE("Σ_j incidence count of (v_i, e_j) equals deg(v_i)") {
  const auto g = p3_bidirected_path();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::size_t total = 0;
    for (const auto& inc : g.incidences()) total += inc.vertex == v;
    CHECK(total == g.degree(v));
  }
}
