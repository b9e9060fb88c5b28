#include "ariki/fock.hpp"
#include "ariki/serialize.hpp"
#include "doctest.h"

using namespace ariki;

namespace {
Multipartition mp(const std::string& s) { return parse_multipartition(s); }

const std::vector<ChargeParams>& grid() {
  static const std::vector<ChargeParams> g = {
      ChargeParams::make(2, 4, {0, 1}), ChargeParams::make(2, 2, {0, 1}),
      ChargeParams::make(3, 3, {0, 1, 2}), ChargeParams::make(2, 4, {1, 2})};
  return g;
}

// f_i applied j times.
FockVector f_power(FockVector v, int i, int j, NodeOrder o, const ChargeParams& p) {
  for (int t = 0; t < j; ++t) v = f_action(v, i, o, p);
  return v;
}
}  // namespace

TEST_CASE("fock vector arithmetic") {
  auto v = FockVector::basis(mp("2,-"));
  v.add(mp("1.1,-"), LaurentPoly::monomial(1));
  CHECK(v.size() == 2);
  CHECK(v.rank() == 2);
  CHECK(format_fock(v) == "(2,0) + q*(1.1,0)");
  CHECK((v - v).is_zero());
  CHECK(v.bar().coefficient(mp("1.1,-")) == LaurentPoly::monomial(-1));
  CHECK_THROWS_AS(v.add(mp("1,-"), LaurentPoly(1)), InvalidArgument);
  CHECK_THROWS_AS(v.divide_exact(gauss_number(2)), DomainError);
  CHECK((v * gauss_number(2)).divide_exact(gauss_number(2)) == v);
  CHECK(FockVector().rank() == -1);
}

TEST_CASE("f and e on small examples") {
  const auto p = ChargeParams::make(1, 2, {0});
  const auto empty = FockVector::basis(Multipartition::empty(1));
  const auto f0 = f_action(empty, 0, NodeOrder::FLOTW, p);
  CHECK(f0 == FockVector::basis(mp("1")));
  CHECK(f_action(empty, 1, NodeOrder::FLOTW, p).is_zero());
  const auto f10 = f_action(f0, 1, NodeOrder::FLOTW, p);
  CHECK(f10.size() == 2);
  CHECK(f10.coefficient(mp("2")) + f10.coefficient(mp("1.1")) == LaurentPoly(1) + LaurentPoly::monomial(1));
  CHECK(e_action(f0, 0, NodeOrder::FLOTW, p) == empty);
}

TEST_CASE("weights count addable minus removable nodes") {
  for (const auto& p : grid())
    for (int n = 0; n <= 4; ++n)
      for (const auto& m : enumerate_multipartitions(p.d(), n)) {
        const auto w = weights(m, p);
        for (int i = 0; i < p.e(); ++i)
          CHECK(w.n[static_cast<std::size_t>(i)] ==
                static_cast<int>(addable_i_nodes(m, i, p).size()) - static_cast<int>(removable_i_nodes(m, i, p).size()));
      }
}

TEST_CASE("f and e at q = 1 are adjacency counts") {
  for (const auto& p : grid())
    for (auto o : {NodeOrder::AM, NodeOrder::FLOTW})
      for (int n = 0; n <= 3; ++n)
        for (const auto& m : enumerate_multipartitions(p.d(), n))
          for (int i = 0; i < p.e(); ++i) {
            const auto f = f_action(FockVector::basis(m), i, o, p);
            CHECK(f.size() == addable_i_nodes(m, i, p).size());
            for (const auto& [mu, c] : f.terms()) CHECK(c.eval_at_one() == 1);
            const auto e = e_action(FockVector::basis(m), i, o, p);
            CHECK(e.size() == removable_i_nodes(m, i, p).size());
          }
}

TEST_CASE("divided powers times q-factorial equal ordinary powers") {
  for (const auto& p : grid())
    for (auto o : {NodeOrder::AM, NodeOrder::FLOTW})
      for (int n = 0; n <= 3; ++n)
        for (const auto& m : enumerate_multipartitions(p.d(), n))
          for (int i = 0; i < p.e(); ++i)
            for (int j = 1; j <= 3; ++j) {
              const auto v = FockVector::basis(m);
              const auto power = f_power(v, i, j, o, p);
              CHECK(f_divided(v, i, j, o, p) * gauss_factorial(j) == power);
              CHECK(power.divide_exact(gauss_factorial(j)) == f_divided(v, i, j, o, p));
            }
}

TEST_CASE("f_i and f_j commute for non-adjacent residues") {
  const auto p = ChargeParams::make(2, 4, {0, 1});
  for (int n = 0; n <= 3; ++n)
    for (const auto& m : enumerate_multipartitions(2, n)) {
      const auto v = FockVector::basis(m);
      CHECK(f_action(f_action(v, 0, NodeOrder::FLOTW, p), 2, NodeOrder::FLOTW, p) ==
            f_action(f_action(v, 2, NodeOrder::FLOTW, p), 0, NodeOrder::FLOTW, p));
    }
}

TEST_CASE("residue range is checked") {
  const auto p = ChargeParams::make(2, 4, {0, 1});
  const auto v = FockVector::basis(Multipartition::empty(2));
  CHECK_THROWS_AS(f_action(v, 4, NodeOrder::FLOTW, p), InvalidArgument);
  CHECK_THROWS_AS(f_divided(v, 0, -1, NodeOrder::FLOTW, p), InvalidArgument);
}
