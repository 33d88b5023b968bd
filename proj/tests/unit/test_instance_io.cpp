#include "doctest.h"
#include "unit/fixtures.hpp"

#include "ohg/instance_io.hpp"
#include "ohg/matrix_builders.hpp"

using namespace ohg;
using namespace ohg::testing;

namespace {

constexpr const char* kTwoVertex = R"({
  "format_version": 1,
  "vertices": ["v1", "v2"],
  "edges": ["e1"],
  "incidences": [
    {"v": "v1", "e": "e1", "k": 1, "sign": 1},
    {"v": "v2", "e": "e1", "k": 1, "sign": 1}
  ]
}
)";

}  // namespace

TEST_CASE("parse a minimal instance") {
  CHECK(parse_instance(kTwoVertex) == two_vertex_edge());
}

TEST_CASE("canonical serialization is byte-exact") {
  CHECK(serialize_instance(two_vertex_edge()) == kTwoVertex);
  CHECK(serialize_instance(OrientedHypergraph{}) ==
        "{\n  \"format_version\": 1,\n  \"vertices\": [],\n  \"edges\": [],\n  \"incidences\": []\n}\n");
}

TEST_CASE("serialization sorts incidences by (vertex, edge, k)") {
  const std::string shuffled = R"({"format_version": 1, "vertices": ["v1", "v2"], "edges": ["e1"],
    "incidences": [{"v": "v2", "e": "e1", "k": 1, "sign": 1}, {"v": "v1", "e": "e1", "k": 1, "sign": 1}]})";
  CHECK(serialize_instance(parse_instance(shuffled)) == kTwoVertex);
}

TEST_CASE("sign 0 is rejected with the field path") {
  const std::string doc = R"({"format_version": 1, "vertices": ["v1"], "edges": ["e1"],
    "incidences": [{"v": "v1", "e": "e1", "k": 1, "sign": 0}]})";
  CHECK_THROWS_WITH_AS(parse_instance(doc), doctest::Contains("incidences[0].sign"), ParseError);
}

TEST_CASE("multiplicity gap is an invariant error") {
  const std::string doc = R"({"format_version": 1, "vertices": ["v1"], "edges": ["e1"],
    "incidences": [{"v": "v1", "e": "e1", "k": 2, "sign": 1}]})";
  CHECK_THROWS_WITH_AS(parse_instance(doc), doctest::Contains("multiplicity gap"), InvalidHypergraphError);
  const auto report = validate(parse_instance_data(doc));
  REQUIRE(report.size() == 1);
  CHECK(report[0].kind == IssueKind::multiplicity_gap);
}

TEST_CASE("unknown labels and duplicates are invariant errors") {
  const std::string unknown = R"({"format_version": 1, "vertices": ["v1"], "edges": ["e1"],
    "incidences": [{"v": "v7", "e": "e1", "k": 1, "sign": 1}]})";
  CHECK_THROWS_WITH_AS(parse_instance(unknown), doctest::Contains("incidences[0]"), InvalidHypergraphError);
  const std::string dup = R"({"format_version": 1, "vertices": ["v1"], "edges": ["e1"],
    "incidences": [{"v": "v1", "e": "e1", "k": 1, "sign": 1}, {"v": "v1", "e": "e1", "k": 1, "sign": -1}]})";
  CHECK_THROWS_WITH_AS(parse_instance(dup), doctest::Contains("duplicate incidence"), InvalidHypergraphError);
}

TEST_CASE("syntax errors carry a line and column") {
  const std::string doc = "{\n  \"format_version\": 1,\n  \"vertices\": [\"v1\",]\n}";
  CHECK_THROWS_WITH_AS(parse_instance(doc), doctest::Contains("line 3"), ParseError);
}

TEST_CASE("schema errors name the field") {
  CHECK_THROWS_WITH_AS(parse_instance(R"({"format_version": 1, "vertices": [], "edges": []})"),
                       doctest::Contains("incidences"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance(R"({"format_version": 2, "vertices": [], "edges": [], "incidences": []})"),
                       doctest::Contains("format_version"), ParseError);
  CHECK_THROWS_WITH_AS(parse_instance(R"({"format_version": 1, "vertices": [1], "edges": [], "incidences": []})"),
                       doctest::Contains("vertices[0]"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_instance(R"({"format_version": 1, "vertices": ["v"], "edges": ["e"], "incidences": [{"v": "v", "e": "e", "sign": 1}]})"),
      doctest::Contains("incidences[0]: missing field 'k'"), ParseError);
}

TEST_CASE("matrix CSV") {
  const auto a = adjacency_matrix(two_vertex_edge());
  CHECK(serialize_matrix(a, MatrixFormat::csv) == ",v1,v2\nv1,0,-1\nv2,-1,0\n");
  CHECK(serialize_matrix(LabeledMatrix{}, MatrixFormat::csv) == "\n");
  CHECK(parse_matrix(serialize_matrix(a, MatrixFormat::csv), MatrixFormat::csv) == a);
  CHECK(parse_matrix("\n", MatrixFormat::csv) == LabeledMatrix{});
}

TEST_CASE("matrix JSON") {
  const auto h = incidence_matrix(p3_bidirected_path());
  CHECK(serialize_matrix(h, MatrixFormat::json) ==
        R"({"cols":["e1","e2"],"entries":[[1,0],[-1,1],[0,-1]],"rows":["v1","v2","v3"]})" "\n");
  CHECK(parse_matrix(serialize_matrix(h, MatrixFormat::json), MatrixFormat::json) == h);
}

TEST_CASE("CSV quoting survives awkward labels") {
  LabeledMatrix m({"a,b", "q\"x"}, {"c"});
  m(0, 0) = 7;
  m(1, 0) = -3;
  const auto text = serialize_matrix(m, MatrixFormat::csv);
  CHECK(text == ",c\n\"a,b\",7\n\"q\"\"x\",-3\n");
  CHECK(parse_matrix(text, MatrixFormat::csv) == m);
}

TEST_CASE("malformed CSV") {
  CHECK_THROWS_AS(parse_matrix(",a\nx,1,2\n", MatrixFormat::csv), ParseError);
  CHECK_THROWS_AS(parse_matrix(",a\nx,one\n", MatrixFormat::csv), ParseError);
  CHECK_THROWS_AS(parse_matrix("", MatrixFormat::csv), ParseError);
}

TEST_CASE("switching function documents") {
  const auto theta = parse_switching_function(R"({"v1": -1, "v2": 1})");
  CHECK(theta == SwitchingFunction{{"v1", Sign::negative}, {"v2", Sign::positive}});
  CHECK(parse_switching_function(serialize_switching_function(theta)) == theta);
  CHECK_THROWS_AS(parse_switching_function(R"({"v1": 0})"), ParseError);
  CHECK_THROWS_AS(parse_switching_function("[1]"), ParseError);
}
