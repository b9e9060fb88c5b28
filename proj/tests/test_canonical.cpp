#include "ariki/canonical.hpp"
#include "ariki/crystal.hpp"
#include "ariki/serialize.hpp"
#include "doctest.h"

using namespace ariki;

namespace {
Multipartition mp(const std::string& s) { return parse_multipartition(s); }

void check_structure(const ChargeParams& p, int n) {
  const auto basis = canonical_basis(p, n);
  int flotw = 0;
  for (const auto& m : enumerate_multipartitions(p.d(), n)) flotw += is_flotw(m, p);
  CHECK(static_cast<int>(basis.size()) == flotw);
  for (const auto& b : basis) {
    CHECK(b.vector.coefficient(b.label) == LaurentPoly(1));
    for (const auto& [mu, c] : b.vector.terms()) {
      if (mu == b.label) continue;
      CHECK(c.in_q_zq());
      CHECK(c.eval_at_one() >= 0);
      for (const auto& [deg, coef] : c.terms()) CHECK(coef >= 0);
      CHECK(a_value(mu, p) > b.a);
    }
  }
}
}  // namespace

TEST_CASE("level one, e = 2, rank 2") {
  const auto p = ChargeParams::make(1, 2, {0});
  const auto basis = canonical_basis(p, 2);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0].label == mp("2"));
  CHECK(format_fock(basis[0].vector) == "(2) + q*(1.1)");
  const auto m = decomposition_matrix(p, 2);
  CHECK(m.cols.size() == 1);
  CHECK(m.entry(0, 0) == 1);
  CHECK(m.entry(1, 0) == 1);
}

TEST_CASE("compute_A starts the basis element") {
  const auto p = ChargeParams::make(2, 4, {0, 1});
  const auto a = compute_A(mp("2.2,2.2.1"), p);
  CHECK(a.coefficient(mp("2.2,2.2.1")) == LaurentPoly(1));
  CHECK(a.size() >= 1);
}

TEST_CASE("canonical basis structure") {
  for (int n = 0; n <= 5; ++n) check_structure(ChargeParams::make(2, 4, {0, 1}), n);
  for (int n = 0; n <= 4; ++n) check_structure(ChargeParams::make(2, 2, {0, 1}), n);
  for (int n = 0; n <= 4; ++n) check_structure(ChargeParams::make(3, 3, {0, 1, 2}), n);
}

TEST_CASE("reverse tie handling gives the same basis") {
  const auto p = ChargeParams::make(2, 2, {0, 1});
  const auto a = canonical_basis(p, 4);
  const auto b = canonical_basis(p, 4, CanonicalOptions{true});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].vector == b[i].vector);
  }
}

TEST_CASE("decomposition matrix shape and a-minimality") {
  const auto p = ChargeParams::make(2, 4, {0, 1});
  const auto m = decomposition_matrix(p, 4);
  CHECK(m.rows.size() == enumerate_multipartitions(2, 4).size());
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    const int r = m.row_index(m.cols[c]);
    REQUIRE(r >= 0);
    CHECK(m.entry(static_cast<std::size_t>(r), c) == 1);
    CHECK(m.row_a[static_cast<std::size_t>(r)] == m.col_a[c]);
    for (std::size_t rr = 0; rr < m.rows.size(); ++rr)
      if (m.entry(rr, c) != 0 && static_cast<int>(rr) != r) CHECK(m.row_a[rr] > m.col_a[c]);
    REQUIRE(m.col_kleshchev[c].has_value());
    CHECK(is_kleshchev(*m.col_kleshchev[c], p));
  }
  const auto am = simple_module_a_values(m);
  CHECK(am.size() == m.cols.size());
}

TEST_CASE("semisimple parameters give the identity") {
  CHECK(decomposition_matrix(ChargeParams::make(1, 5, {0}), 3).is_identity());
  CHECK(decomposition_matrix(ChargeParams::make(2, 4, {0, 2}), 2).is_identity());
  CHECK_FALSE(decomposition_matrix(ChargeParams::make(1, 2, {0}), 2).is_identity());
}
