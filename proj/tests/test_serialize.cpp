#include "ariki/canonical.hpp"
#include "ariki/crystal.hpp"
#include "ariki/serialize.hpp"
#include "doctest.h"

using namespace ariki;

TEST_CASE("multipartition text round trip") {
  for (const char* s : {"2.2,2.2.1", "-,1", "-", "3.1", "-,-,-"}) CHECK(format_multipartition(parse_multipartition(s)) == s);
  CHECK(parse_multipartition("(2.2),(2.2.1)") == parse_multipartition("2.2,2.2.1"));
  CHECK(parse_multipartition("0,1") == parse_multipartition("-,1"));
  CHECK_THROWS_AS(parse_multipartition("1.2"), InvalidArgument);
  CHECK_THROWS_AS(parse_multipartition("a"), InvalidArgument);
  CHECK_THROWS_AS(parse_multipartition("1,1", 3), InvalidArgument);
  CHECK(format_multicomposition(parse_multicomposition("1.3,2")) == "1.3,2");
  CHECK(parse_int_list("0,1,2") == std::vector<int>{0, 1, 2});
}

TEST_CASE("stage and node formatting") {
  CHECK(format_stage(parse_multipartition("2.2,-")) == "(2.2,0)");
  CHECK(format_node(Node{2, 1, 0}) == "(2,1,0)");
}

TEST_CASE("json round trips") {
  const auto m = parse_multipartition("2.2,2.2.1");
  CHECK(multipartition_from_json(to_json(m)) == m);
  const auto p = ChargeParams::make(3, 3, {0, 1, 2}, 2);
  const auto q = params_from_json(to_json(p));
  CHECK(std::equal(q.v().begin(), q.v().end(), p.v().begin(), p.v().end()));
  CHECK(q.s() == p.s());
  CHECK(q.e() == p.e());
  const auto poly = LaurentPoly::from_terms({{-1, 2}, {3, -5}});
  CHECK(laurent_from_json(to_json(poly)) == poly);
  const auto basis = canonical_basis(ChargeParams::make(2, 2, {0, 1}), 3);
  for (const auto& b : basis) CHECK(fock_from_json(to_json(b.vector)) == b.vector);
  const auto mat = decomposition_matrix(ChargeParams::make(2, 2, {0, 1}), 3);
  const auto back = matrix_from_json(to_json(mat));
  CHECK(back.rows == mat.rows);
  CHECK(back.cols == mat.cols);
  CHECK(back.entries == mat.entries);
  CHECK(back.graded == mat.graded);
  CHECK(to_json(back) == to_json(mat));
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(multipartition_from_json(Json::parse("[[1,2]]")), InvalidArgument);
  CHECK_THROWS_AS(params_from_json(Json::parse("{\"d\":2}")), InvalidArgument);
  CHECK_THROWS_AS(laurent_from_json(Json::parse("\"x\"")), InvalidArgument);
}

TEST_CASE("dot output names every vertex") {
  const auto g = crystal_graph(ChargeParams::make(1, 2, {0}), 3, NodeOrder::FLOTW);
  const auto dot = crystal_to_dot(g);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"2.1\"") != std::string::npos);
}
