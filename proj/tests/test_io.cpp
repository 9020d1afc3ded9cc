#include <doctest.h>

#include "quiverdom/io.hpp"

using namespace quiverdom;

namespace {

std::string xy_doc() {
  return R"({
    "field": {"kind": "prime", "p": 2},
    "quiver": {
      "vertices": ["1"],
      "arrows": [
        {"name": "x", "src": "1", "tgt": "1"},
        {"name": "y", "src": "1", "tgt": "1"}
      ]
    },
    "relations": [[{"coeff": "1", "path": ["x", "y"]}]],
    "options": {"maxDegree": 6, "maxSyzygy": 4, "budget": 5000}
  })";
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("parse reads field, quiver, relations, and options") {
  ParsedInput in = parse_input(xy_doc());
  CHECK(in.pres.field() == FieldSpec::prime(2));
  CHECK(in.pres.quiver().vertex_count() == 1);
  CHECK(in.pres.quiver().arrow_count() == 2);
  CHECK(in.pres.relation_strings() == std::vector<std::string>{"x·y"});
  CHECK(in.options.max_degree == 6);
  CHECK(in.options.max_syzygy == 4);
  CHECK(in.options.budget == 5000);
  CHECK_FALSE(in.options.oracle_field.has_value());
  CHECK(in.hash.substr(0, 6) == "fnv1a:");
}

TEST_CASE("options default when absent and oracleField parses") {
  ParsedInput in = parse_input(R"({
    "field": {"kind": "rational"},
    "quiver": {"vertices": ["v"], "arrows": [{"name":"x","src":"v","tgt":"v"}]},
    "options": {"oracleField": {"kind": "prime", "p": 3}}
  })");
  CHECK(in.options.max_degree == 8);
  CHECK(in.options.max_syzygy == 6);
  CHECK(in.options.budget == 1'000'000);
  REQUIRE(in.options.oracle_field.has_value());
  CHECK(*in.options.oracle_field == FieldSpec::prime(3));
  CHECK(in.pres.relation_count() == 0);  // relations key optional: free algebra
}

TEST_CASE("serialize then parse is the identity on the canonical form") {
  ParsedInput in = parse_input(xy_doc());
  json doc = input_document(in.pres, in.options);
  ParsedInput again = parse_input(doc.dump());
  CHECK(input_document(again.pres, again.options) == doc);
  CHECK(again.hash == in.hash);
  CHECK(again.pres.relation_strings() == in.pres.relation_strings());

  // a multi-vertex presentation with multi-term relations round-trips too
  auto Q = FieldSpec::rationals();
  Quiver cyc({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}});
  QuadraticPresentation pp = preprojective_presentation(cyc, Q);
  InputOptions opt;
  json pdoc = input_document(pp, opt);
  ParsedInput pin = parse_input(pdoc.dump());
  CHECK(input_document(pin.pres, pin.options) == pdoc);
  CHECK(pin.pres.relation_strings() == pp.relation_strings());
}

TEST_CASE("field override replaces the document field before parsing") {
  ParsedInput in = parse_input(xy_doc(), FieldSpec::rationals());
  CHECK(in.pres.field() == FieldSpec::rationals());
  // the hash tracks the effective field
  CHECK(in.hash != parse_input(xy_doc()).hash);
}

TEST_CASE("parse errors carry context") {
  CHECK_THROWS_WITH_AS(parse_input("not json"),
                       doctest::Contains("not valid JSON"), IoError);
  CHECK_THROWS_WITH_AS(
      parse_input(R"({"quiver": {"vertices": ["1"], "arrows": [
        {"name":"x","src":"1","tgt":"zz"}]}})"),
      doctest::Contains("unknown vertex"), IoError);
  CHECK_THROWS_WITH_AS(
      parse_input(R"({"field": {"kind":"prime","p":2},
        "quiver": {"vertices": ["1"], "arrows": [{"name":"x","src":"1","tgt":"1"}]},
        "relations": [[{"coeff":"2/0","path":["x","x"]}]]})"),
      doctest::Contains("bad coefficient"), IoError);
  CHECK_THROWS_WITH_AS(
      parse_input(R"({"quiver": {"vertices": ["1"], "arrows": [{"name":"x","src":"1","tgt":"1"}]},
        "relations": [[{"coeff":"1","path":["x"]}]]})"),
      doctest::Contains("exactly two arrow names"), IoError);
  CHECK_THROWS_WITH_AS(parse_input(R"({"field": {"kind":"septimal"},
        "quiver": {"vertices": ["1"]}})"),
                       doctest::Contains("unknown field kind"), IoError);
}

TEST_CASE("classification report serializes deterministically with stable keys") {
  ParsedInput in = parse_input(xy_doc());
  auto rep = classify(in.pres, in.options.max_degree, in.options.max_syzygy,
                      in.options.budget);
  json j = classification_json(rep, in.pres.quiver());
  CHECK(j.at("verdicts").at("piecewise_domain").at("verdict") == "no");
  CHECK(j.at("verdicts").at("domain").at("verdict") == "no");
  CHECK(j.at("syzygy_condition").at("status") == "fails");
  CHECK(j.at("syzygy_condition").at("witness").at("coeffs") ==
        json::array({"0", "1"}));
  CHECK(j.at("oracle_cross_check").at("agrees") == true);
  // byte-identical reruns
  auto rep2 = classify(in.pres, in.options.max_degree, in.options.max_syzygy,
                       in.options.budget);
  CHECK(classification_json(rep2, in.pres.quiver()).dump() == j.dump());
  // key order is fixed by construction
  auto it = j.begin();
  CHECK(it.key() == "summary");
  ++it;
  CHECK(it.key() == "verdicts");
}

TEST_CASE("report envelope echoes hash and parameters") {
  ParsedInput in = parse_input(xy_doc());
  json doc = report_document("classify", in, json::object());
  CHECK(doc.at("schema") == "quiverdom-report/1");
  CHECK(doc.at("command") == "classify");
  CHECK(doc.at("input_hash") == in.hash);
  CHECK(doc.at("field") == "F2");
  CHECK(doc.at("parameters").at("maxDegree") == 6);
  CHECK(doc.at("parameters").at("budget") == 5000);
}

TEST_CASE("hilbert json lists the per-vertex series") {
  auto Q = FieldSpec::rationals();
  Quiver cyc({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}});
  auto dual = quadratic_dual(preprojective_presentation(cyc, Q));
  auto alg = TruncatedGradedAlgebra::build(dual, 4);
  json j = hilbert_json(alg);
  CHECK(j.at("series") ==
        json::array({"1 + 2t + t^2", "1 + 2t + t^2", "1 + 2t + t^2"}));
  CHECK(j.at("vertices").size() == 3);
}

TEST_SUITE_END();
