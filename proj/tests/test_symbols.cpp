#include "ariki/serialize.hpp"
#include "ariki/symbols.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ariki;

namespace {
const std::vector<ChargeParams>& grid() {
  static const std::vector<ChargeParams> g = {
      ChargeParams::make(2, 4, {0, 1}), ChargeParams::make(2, 2, {0, 1}),
      ChargeParams::make(3, 3, {0, 1, 2}), ChargeParams::make(2, 4, {1, 2})};
  return g;
}
}  // namespace

TEST_CASE("ordinary symbol of a composition") {
  const auto b = ordinary_symbol(parse_multicomposition("4.2,-,5.2.1"));
  CHECK(b.height == 3);
  const std::vector<std::vector<std::int64_t>> want = {{6, 3, 0}, {2, 1, 0}, {7, 3, 1}};
  CHECK(b.rows == want);
  CHECK(b.abs() == 23);
  CHECK(format_symbol(b) == "B(0) = 6 3 0\nB(1) = 2 1 0\nB(2) = 7 3 1\n");
}

TEST_CASE("shifted symbol with rational weights") {
  const auto b = ordinary_symbol(parse_multicomposition("4.2,-,5.2.1"));
  const auto s = shifted_symbol(b, {Rational(1), Rational(1, 2), Rational(2)});
  CHECK(s.entry(0, 0) == Rational(7));
  CHECK(s.entry(1, 0) == Rational(5, 2));
  CHECK(s.entry(1, 2) == Rational(1, 2));
  CHECK(s.entry(2, 2) == Rational(3));
  CHECK(format_symbol(s) == "B'(0) = 7 4 1\nB'(1) = 5/2 3/2 1/2\nB'(2) = 9 5 3\n");
  CHECK_THROWS_AS(shifted_symbol(b, {Rational(1)}), InvalidArgument);
}

TEST_CASE("symbol shift k adds rows") {
  const auto m = parse_multipartition("2.1,1");
  const auto b0 = ordinary_symbol(m, 0);
  const auto b2 = ordinary_symbol(m, 2);
  CHECK(b2.height == b0.height + 2);
  CHECK(b2.rows[0].back() == 0);
  CHECK(b2.rows[0].front() == b0.rows[0].front() + 2);
  CHECK_THROWS_AS(ordinary_symbol(m, -1), InvalidArgument);
}

TEST_CASE("empty multipartition has a-value zero") {
  for (const auto& p : grid()) {
    CHECK(a_value(Multipartition::empty(p.d()), p).numerator == 0);
    CHECK(schur_valuation(Multipartition::empty(p.d()), p) == 0);
  }
}

TEST_CASE("a-value of the worked example") {
  const auto p = ChargeParams::make(2, 4, {0, 1});
  const auto a = a_value(parse_multipartition("2.2,2.2.1"), p);
  CHECK(a.denominator == 2);
  CHECK(a.value() == Rational(17));
}

TEST_CASE("classical a-value when d = 1") {
  for (int e : {2, 3, 5}) {
    const auto p = ChargeParams::make(1, e, {0});
    for (int n = 0; n <= 9; ++n)
      for (const auto& lam : enumerate_partitions(n)) {
        Multipartition m({lam});
        CHECK(a_value(m, p).value() == Rational(oracle::classical_a(oracle::parts_of(lam))));
      }
  }
}

TEST_CASE("a-value equals minus valuation over d and the rational-weight oracle") {
  for (const auto& p : grid())
    for (int n = 0; n <= 4; ++n)
      for (const auto& m : enumerate_multipartitions(p.d(), n)) {
        const auto a = a_value(m, p);
        CHECK(a.value() == Rational(-schur_valuation(m, p), p.d()));
        CHECK(a.value() == oracle::a_from_schur(m, p.e(), p.v(), p.s()));
      }
}

TEST_CASE("a-value and valuation do not depend on the symbol shift") {
  for (const auto& p : grid())
    for (int n = 0; n <= 4; ++n)
      for (const auto& m : enumerate_multipartitions(p.d(), n))
        for (int k : {1, 2}) {
          CHECK(a_value(m, p, k) == a_value(m, p, 0));
          CHECK(schur_valuation(m, p, k) == schur_valuation(m, p, 0));
        }
}

TEST_CASE("prec agrees with a-value order on multipartitions") {
  for (const auto& p : grid())
    for (int n = 1; n <= 4; ++n) {
      const auto all = enumerate_multipartitions(p.d(), n);
      for (const auto& x : all)
        for (const auto& y : all) {
          const bool lt = a_value(x, p) < a_value(y, p);
          CHECK(prec(to_multicomposition(x), to_multicomposition(y), p) == lt);
        }
    }
}

TEST_CASE("prec rejects mismatched inputs") {
  const auto p = ChargeParams::make(2, 4, {0, 1});
  CHECK_THROWS_AS(prec(parse_multicomposition("1,-"), parse_multicomposition("2,-"), p), InvalidArgument);
  CHECK_THROWS_AS(prec(parse_multicomposition("1"), parse_multicomposition("1"), p), InvalidArgument);
}
