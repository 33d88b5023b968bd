#include "doctest.h"
#include "golden/golden_values.hpp"

using namespace ohg;
using namespace ohg::testing;

TEST_CASE("golden matrices") {
  const auto cases = golden_cases();
  CHECK(cases.size() > 40);
  for (const auto& c : cases) {
    INFO(c.instance, ": ", c.quantity);
    CHECK(c.actual == c.expected);
  }
}

TEST_CASE("golden: individual walk counts") {
  CHECK(walk_counts(two_vertex_edge(), "v1", "v2", 2, false) == WalkCounts{1, 0, 1, -1});
  CHECK(walk_counts(two_vertex_edge(), "v1", "v1", 2, true) == WalkCounts{1, 0, 1, -1});
  CHECK(walk_counts(two_vertex_edge(), "v1", "v1", 2, false) == WalkCounts{0, 0, 0, 0});
  CHECK(walk_counts(double_incidence(), "v1", "v1", 2, false) == WalkCounts{2, 2, 0, 2});
  CHECK(walk_counts(double_incidence(), "v1", "v1", 2, true) == WalkCounts{4, 2, 2, 0});
}
