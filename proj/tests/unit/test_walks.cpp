#include "doctest.h"
#include "unit/fixtures.hpp"

#include <algorithm>

#include "ohg/matrix_builders.hpp"
#include "ohg/walks.hpp"

using namespace ohg;
using namespace ohg::testing;

namespace {

Anchor V(std::size_t i) { return {AnchorKind::vertex, i}; }
Anchor E(std::size_t i) { return {AnchorKind::edge, i}; }

}  // namespace

TEST_CASE("walk_sign") {
  const auto g = two_vertex_edge();
  CHECK(walk_sign(g, Walk{{V(0)}, {}, false}) == Sign::positive);
  // v1, (v1,e1), e1, (v2,e1), v2
  CHECK(walk_sign(g, Walk{{V(0), E(0), V(1)}, {0, 1}, false}) == Sign::negative);
}

TEST_CASE("every backstep is negative whatever σ is") {
  for (int s : {1, -1}) {
    const auto g = make({"v"}, {"e"}, {{"v", "e", 1, s}});
    CHECK(walk_sign(g, Walk{{V(0), E(0), V(0)}, {0, 0}, true}) == Sign::negative);
  }
}

TEST_CASE("walk_sign rejects malformed walks") {
  const auto g = p3_bidirected_path();
  CHECK_THROWS_AS(walk_sign(g, Walk{{V(0), E(0)}, {}, false}), StructuralError);
  CHECK_THROWS_AS(walk_sign(g, Walk{{V(0), V(1)}, {0}, false}), StructuralError);
  // (v3,e2) does not touch v1
  CHECK_THROWS_AS(walk_sign(g, Walk{{V(0), E(1)}, {3}, false}), StructuralError);
  // backstep without the weak flag
  CHECK_THROWS_AS(walk_sign(g, Walk{{V(0), E(0), V(0)}, {0, 0}, false}), StructuralError);
}

TEST_CASE("enumerate_walks on the two-vertex edge") {
  const auto g = two_vertex_edge();
  const auto walks = enumerate_walks(g, "v1", "v2", 2, false);
  REQUIRE(walks.size() == 1);
  CHECK(walks[0].anchors == std::vector<Anchor>{V(0), E(0), V(1)});
  CHECK(enumerate_walks(g, "v1", "v1", 2, true).size() == 1);
  CHECK(enumerate_walks(g, "v1", "v1", 2, false).empty());
}

TEST_CASE("enumerate_walks on the double incidence lists both orderings") {
  const auto g = double_incidence();
  const auto walks = enumerate_walks(g, "v1", "v1", 2, false);
  REQUIRE(walks.size() == 2);
  CHECK(walks[0].incidences == std::vector<std::size_t>{0, 1});
  CHECK(walks[1].incidences == std::vector<std::size_t>{1, 0});
  for (const auto& w : walks) CHECK(walk_sign(g, w) == Sign::positive);
}

TEST_CASE("walks may leave along the incidence they arrived on") {
  // v1 (v1,e1) e1 (v2,e1) v2 (v2,e1) e1 is legal: only (i1,i2) is paired.
  const auto g = two_vertex_edge();
  const auto walks = enumerate_walks(g, "v1", "e1", 3, false);
  REQUIRE(walks.size() == 1);
  CHECK(walks[0].incidences == std::vector<std::size_t>{0, 1, 1});
  // The reverse direction pairs at the vertex instead, and v2 has one
  // incidence only, so there is nothing to count.
  CHECK(enumerate_walks(g, "e1", "v1", 3, false).empty());
}

TEST_CASE("walk_counts") {
  const auto g = two_vertex_edge();
  CHECK(walk_counts(g, "v1", "v2", 2, false) == WalkCounts{1, 0, 1, -1});
  CHECK(walk_counts(g, "v1", "v1", 0, false) == WalkCounts{1, 1, 0, 1});
  CHECK(walk_counts(g, "v1", "v2", 0, false).total == 0);
  CHECK(walk_counts(g, "e1", "e1", 0, false).total == 1);
  CHECK(walk_counts(double_incidence(), "v1", "v1", 2, true) == WalkCounts{4, 2, 2, 0});
}

TEST_CASE("parity and label errors") {
  const auto g = two_vertex_edge();
  CHECK_THROWS_AS(walk_counts(g, "v1", "v2", 1, false), ArgumentError);
  CHECK_THROWS_AS(walk_counts(g, "v1", "e1", 2, false), ArgumentError);
  CHECK_THROWS_AS(walk_counts(g, "v1", "nope", 2, false), ArgumentError);
  CHECK_THROWS_AS(walk_matrix(g, AnchorKind::vertex, AnchorKind::edge, 2), ArgumentError);
  CHECK_THROWS_AS(walk_matrix(g, AnchorKind::vertex, AnchorKind::vertex, 3), ArgumentError);
  CHECK_THROWS_AS(backstep_count(g, "e1"), ArgumentError);
}

TEST_CASE("enumeration ceilings") {
  const auto g = three_uniform_all_plus();
  CHECK_THROWS_AS(walk_counts(g, "v1", "v1", 14, false), ResourceError);
  EnumerationLimits tight{12, 1};
  CHECK_THROWS_AS(enumerate_walks(g, "v1", "v1", 4, false, tight), ResourceError);
  CHECK_NOTHROW(enumerate_walks(g, "v1", "v2", 4, false, tight));
}

TEST_CASE("walk matrices") {
  const auto g = p3_bidirected_path();
  CHECK(walk_matrix(g, AnchorKind::vertex, AnchorKind::edge, 1) == incidence_matrix(g));
  CHECK(walk_matrix(g, AnchorKind::vertex, AnchorKind::vertex, 0) ==
        LabeledMatrix::identity({"v1", "v2", "v3"}));
  for (unsigned k = 0; k <= 4; ++k) {
    CHECK(walk_matrix(g, AnchorKind::vertex, AnchorKind::vertex, 2 * k) == power(adjacency_matrix(g), k));
  }
  CHECK(weak_walk_matrix(g, AnchorKind::vertex, AnchorKind::vertex, 2) == -laplacian(g));
  CHECK(weak_walk_matrix(two_vertex_edge(), AnchorKind::vertex, AnchorKind::vertex, 2) ==
        matrix({"v1", "v2"}, {"v1", "v2"}, {{-1, -1}, {-1, -1}}));
}

TEST_CASE("isolated anchors give zero rows and columns") {
  const auto g = make({"v1", "v2", "v3"}, {"e1", "e2"}, {{"v1", "e1", 1, 1}, {"v2", "e1", 1, -1}});
  const auto w = weak_walk_matrix(g, AnchorKind::vertex, AnchorKind::vertex, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(w(2, i) == 0);
    CHECK(w(i, 2) == 0);
  }
  const auto x = walk_matrix(g, AnchorKind::edge, AnchorKind::edge, 2);
  CHECK(x(1, 0) == 0);
  CHECK(x(1, 1) == 0);
}

TEST_CASE("backstep_count") {
  CHECK(backstep_count(two_vertex_edge(), "v1") == 1);
  CHECK(backstep_count(make({"v1", "v2"}, {"e1"}, {{"v1", "e1", 1, 1}}), "v2") == 0);
  CHECK(backstep_count(double_incidence(), "v1") == 2);
}

TEST_CASE("enumeration output is sorted by incidence sequence") {
  const auto g = three_uniform_all_plus();
  const auto walks = enumerate_walks(g, "v1", "v1", 4, false);
  REQUIRE(walks.size() > 1);
  CHECK(std::ranges::is_sorted(walks, {}, &Walk::incidences));
}
