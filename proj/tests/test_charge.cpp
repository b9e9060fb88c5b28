#include "ariki/charge.hpp"
#include "ariki/crystal.hpp"
#include "ariki/serialize.hpp"
#include "doctest.h"

using namespace ariki;

TEST_CASE("parameter validation and default shift") {
  const auto p = ChargeParams::make(2, 4, {0, 1});
  CHECK(p.s() == 1);
  CHECK(p.scaled_m(0) == 8);
  CHECK(p.scaled_m(1) == 6);
  CHECK(p.m(0) == Rational(4));
  CHECK(p.m(1) == Rational(3));
  CHECK(ChargeParams::make(1, 2, {0}).s() == 0);
  CHECK_THROWS_AS(ChargeParams::make(2, 4, {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(ChargeParams::make(2, 4, {0, 4}), InvalidArgument);
  CHECK_THROWS_AS(ChargeParams::make(2, 1, {0, 0}), InvalidArgument);
  CHECK_THROWS_AS(ChargeParams::make(2, 4, {0}), InvalidArgument);
  CHECK_THROWS_AS(ChargeParams::make(0, 4, {}), InvalidArgument);
  CHECK_THROWS_AS(ChargeParams::make(2, 4, {0, 1}, 0), InvalidArgument);  // m^(1) < 0
  CHECK_THROWS_AS(ChargeParams::make(2, 4, {0, 1}, -1), InvalidArgument);
}

TEST_CASE("shift adds d*e to every weight") {
  for (const auto& p : {ChargeParams::make(2, 4, {0, 1}), ChargeParams::make(3, 3, {0, 1, 2}), ChargeParams::make(2, 2, {0, 1})}) {
    const auto q = p.with_shift(p.s() + 1);
    for (int j = 0; j < p.d(); ++j) CHECK(q.scaled_m(j) - p.scaled_m(j) == p.d() * p.e());
  }
}

TEST_CASE("residues") {
  const auto p = ChargeParams::make(2, 4, {0, 2});
  CHECK(residue({1, 4, 0}, p) == 3);
  CHECK(residue({2, 5, 1}, p) == 1);
  CHECK(residue({1, 1, 0}, p) == 0);
  CHECK(residue({3, 1, 0}, p) == 2);
  CHECK_THROWS_AS(residue({1, 1, 2}, p), InvalidArgument);
  for (int a = 1; a < 6; ++a)
    for (int b = 1; b < 6; ++b)
      for (int c = 0; c < 2; ++c) CHECK(residue({a, b, c}, p) == residue({a + 1, b + 1, c}, p));
}

TEST_CASE("AM and FLOTW relations") {
  const auto p = ChargeParams::make(2, 4, {0, 1});
  CHECK(am_below({1, 1, 0}, {1, 1, 1}, p));
  CHECK(am_below({1, 2, 0}, {2, 1, 0}, p));
  CHECK_FALSE(am_below({2, 1, 1}, {1, 5, 1}, p));
  CHECK(flotw_above({1, 1, 0}, {1, 1, 1}, p));
  CHECK_FALSE(flotw_above({2, 3, 1}, {2, 3, 1}, p));
  const auto z = ChargeParams::make(2, 4, {0, 0});
  CHECK(flotw_above({1, 1, 1}, {1, 1, 0}, z));
}

TEST_CASE("orders are strict total orders on distinct keys") {
  const auto p = ChargeParams::make(3, 3, {0, 1, 2});
  std::vector<Node> nodes;
  for (int a = 1; a <= 3; ++a)
    for (int c = 0; c < 3; ++c) nodes.push_back({a, 1, c});  // distinct (c, a) and distinct (c, content)
  for (auto order : {NodeOrder::AM, NodeOrder::FLOTW})
    for (const auto& x : nodes)
      for (const auto& y : nodes) {
        if (x == y) {
          CHECK_FALSE(is_below(order, x, y, p));
          continue;
        }
        CHECK(is_below(order, x, y, p) != is_below(order, y, x, p));
        for (const auto& z : nodes)
          if (is_below(order, x, y, p) && is_below(order, y, z, p)) CHECK(is_below(order, x, z, p));
      }
}

TEST_CASE("semisimplicity") {
  CHECK_FALSE(is_semisimple(ChargeParams::make(2, 4, {0, 1}), 2));
  CHECK(is_semisimple(ChargeParams::make(1, 5, {0}), 2));
  CHECK(is_semisimple(ChargeParams::make(2, 4, {0, 1}), 0));
  CHECK(is_semisimple(ChargeParams::make(2, 4, {0, 2}), 2));
  CHECK_FALSE(is_semisimple(ChargeParams::make(2, 4, {0, 2}), 3));
  CHECK_FALSE(is_semisimple(ChargeParams::make(1, 3, {0}), 3));
}

// For equal-residue nodes of a FLOTW multipartition, the shifted diagonal
// b - a + m^(c) orders them exactly as the FLOTW order does.
TEST_CASE("FLOTW order matches shifted diagonals") {
  for (const auto& p : {ChargeParams::make(2, 4, {0, 1}), ChargeParams::make(3, 3, {0, 1, 2})})
    for (int n = 0; n <= 5; ++n)
      for (const auto& m : enumerate_multipartitions(p.d(), n)) {
        if (!is_flotw(m, p)) continue;
        std::vector<Node> cells;
        for (int c = 0; c < m.d(); ++c)
          for (int a = 1; a <= m[c].height(); ++a)
            for (int b = 1; b <= m.part(c, a); ++b) cells.push_back({a, b, c});
        for (const auto& g : cells)
          for (const auto& g2 : cells) {
            if (g == g2 || residue(g, p) != residue(g2, p)) continue;
            const long long x = static_cast<long long>(p.d()) * (g.col - g.row) + p.scaled_m(g.comp);
            const long long y = static_cast<long long>(p.d()) * (g2.col - g2.row) + p.scaled_m(g2.comp);
            CHECK((x > y) == flotw_above(g2, g, p));
          }
      }
}
