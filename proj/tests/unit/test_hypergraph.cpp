#include "doctest.h"
#include "unit/fixtures.hpp"

#include <algorithm>

using namespace ohg;
using namespace ohg::testing;

namespace {

bool has_issue(const ValidationReport& r, IssueKind kind) {
  return std::ranges::any_of(r, [&](const ValidationIssue& i) { return i.kind == kind; });
}

}  // namespace

TEST_CASE("validate accepts a well-formed instance") {
  HypergraphData d{{"v1", "v2"}, {"e1"}, {{"v1", "e1", 1, 1}, {"v2", "e1", 1, 1}}};
  CHECK(validate(d).empty());
}

TEST_CASE("validate names a duplicate incidence triple") {
  HypergraphData d{{"v1"}, {"e1"}, {{"v1", "e1", 1, 1}, {"v1", "e1", 1, 1}}};
  const auto r = validate(d);
  REQUIRE(has_issue(r, IssueKind::duplicate_incidence));
  const auto it = std::ranges::find_if(r, [](auto& i) { return i.kind == IssueKind::duplicate_incidence; });
  CHECK(it->labels == std::vector<std::string>{"v1", "e1"});
}

TEST_CASE("validate names a multiplicity gap") {
  HypergraphData d{{"v1"}, {"e1"}, {{"v1", "e1", 1, 1}, {"v1", "e1", 3, -1}}};
  const auto r = validate(d);
  REQUIRE(r.size() == 1);
  CHECK(r[0].kind == IssueKind::multiplicity_gap);
  CHECK(r[0].message.find("index 2 missing") != std::string::npos);
}

TEST_CASE("validate reports undeclared labels, bad signs and label clashes") {
  HypergraphData d{{"v1", "v1", "x"}, {"e1", "x"}, {{"v9", "e1", 1, 1}, {"v1", "e7", 1, 1}, {"v1", "e1", 1, 0}, {"v1", "x", 0, 1}}};
  const auto r = validate(d);
  CHECK(has_issue(r, IssueKind::duplicate_vertex_label));
  CHECK(has_issue(r, IssueKind::vertex_edge_overlap));
  CHECK(has_issue(r, IssueKind::undeclared_vertex));
  CHECK(has_issue(r, IssueKind::undeclared_edge));
  CHECK(has_issue(r, IssueKind::invalid_sign));
  CHECK(has_issue(r, IssueKind::invalid_mult_index));
  CHECK_THROWS_AS(OrientedHypergraph::from_data(d), InvalidHypergraphError);
}

TEST_CASE("is_simple") {
  CHECK(is_simple(two_vertex_edge()));
  CHECK_FALSE(is_simple(double_incidence()));
  CHECK(is_simple(OrientedHypergraph{}));
}

TEST_CASE("is_k_uniform") {
  const auto g = three_uniform_all_plus();
  CHECK(is_k_uniform(g, 3));
  CHECK_FALSE(is_k_uniform(g, 2));
  const auto edgeless = make({"v1", "v2"}, {}, {});
  for (std::size_t k = 0; k < 5; ++k) CHECK(is_k_uniform(edgeless, k));
}

TEST_CASE("is_k_regular") {
  const auto g = two_vertex_edge();
  CHECK(is_k_regular(g, 1));
  CHECK_FALSE(is_k_regular(g, 2));
  // Degrees in G* are edge sizes in G.
  CHECK(is_k_regular(incidence_dual(three_uniform_all_plus()), 3));
}

TEST_CASE("incidence_dual swaps roles and keeps k and signs") {
  const auto d = incidence_dual(two_vertex_edge());
  CHECK(std::vector<std::string>(d.vertices().begin(), d.vertices().end()) == std::vector<std::string>{"e1"});
  CHECK(std::vector<std::string>(d.edges().begin(), d.edges().end()) == std::vector<std::string>{"v1", "v2"});
  const auto data = d.to_data();
  CHECK(data.incidences == std::vector<LabeledIncidence>{{"e1", "v1", 1, 1}, {"e1", "v2", 1, 1}});

  const auto g = p3_bidirected_path();
  CHECK(incidence_dual(incidence_dual(g)) == g);
  CHECK(incidence_dual(double_incidence()).to_data().incidences ==
        std::vector<LabeledIncidence>{{"e1", "v1", 1, 1}, {"e1", "v1", 2, -1}});
  CHECK(incidence_dual(OrientedHypergraph{}) == OrientedHypergraph{});
}

TEST_CASE("degree and edge size trade places under duality") {
  const auto g = p3_bidirected_path();
  const auto d = incidence_dual(g);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == d.edge_size(v));
  for (std::size_t e = 0; e < g.edge_count(); ++e) CHECK(g.edge_size(e) == d.degree(e));
}

TEST_CASE("switch_vertices") {
  const auto g = two_vertex_edge();
  SwitchingFunction identity{{"v1", Sign::positive}, {"v2", Sign::positive}};
  CHECK(switch_vertices(g, identity) == g);

  SwitchingFunction theta{{"v1", Sign::negative}, {"v2", Sign::positive}};
  const auto s = switch_vertices(g, theta);
  CHECK(s.to_data().incidences == std::vector<LabeledIncidence>{{"v1", "e1", 1, -1}, {"v2", "e1", 1, 1}});
  CHECK(switch_vertices(s, theta) == g);
  // Underlying hypergraph is untouched.
  for (std::size_t i = 0; i < g.incidences().size(); ++i) {
    CHECK(s.incidences()[i].vertex == g.incidences()[i].vertex);
    CHECK(s.incidences()[i].edge == g.incidences()[i].edge);
    CHECK(s.incidences()[i].mult_index == g.incidences()[i].mult_index);
  }
}

TEST_CASE("switch_vertices rejects a θ that does not match V") {
  const auto g = two_vertex_edge();
  SwitchingFunction missing{{"v1", Sign::negative}};
  CHECK_THROWS_WITH_AS(switch_vertices(g, missing), doctest::Contains("v2"), DomainError);
  SwitchingFunction extra{{"v1", Sign::negative}, {"v2", Sign::positive}, {"e1", Sign::positive}};
  CHECK_THROWS_AS(switch_vertices(g, extra), DomainError);
}

TEST_CASE("switching a non-simple hypergraph flips every incidence at the vertex") {
  const auto g = double_incidence();
  const auto s = switch_vertices(g, {{"v1", Sign::negative}});
  CHECK(s.to_data().incidences == std::vector<LabeledIncidence>{{"v1", "e1", 1, -1}, {"v1", "e1", 2, 1}});
}

TEST_CASE("incidences are stored in canonical order regardless of input order") {
  const auto a = make({"v1", "v2"}, {"e1", "e2"},
                      {{"v2", "e2", 1, 1}, {"v1", "e2", 1, -1}, {"v1", "e1", 2, 1}, {"v1", "e1", 1, 1}});
  const auto b = make({"v1", "v2"}, {"e1", "e2"},
                      {{"v1", "e1", 1, 1}, {"v1", "e1", 2, 1}, {"v1", "e2", 1, -1}, {"v2", "e2", 1, 1}});
  CHECK(a == b);
  CHECK(a.find_anchor("e2") == Anchor{AnchorKind::edge, 1});
  CHECK_FALSE(a.find_anchor("nope").has_value());
}
