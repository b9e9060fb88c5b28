#include "ariki/verify.hpp"

#include <functional>
#include <sstream>

#include "ariki/aseq.hpp"
#include "ariki/canonical.hpp"
#include "ariki/crystal.hpp"
#include "ariki/error.hpp"
#include "ariki/fock.hpp"
#include "ariki/serialize.hpp"
#include "ariki/symbols.hpp"
#include "ariki/typeb.hpp"

namespace ariki {

namespace {

std::vector<ChargeParams> grid() {
  return {ChargeParams::make(2, 4, {0, 1}), ChargeParams::make(2, 2, {0, 1}), ChargeParams::make(3, 3, {0, 1, 2}),
          ChargeParams::make(2, 4, {1, 2})};
}

std::string label(const ChargeParams& p) {
  std::ostringstream os;
  os << "{e=" << p.e() << ";";
  for (int j = 0; j < p.d(); ++j) os << (j ? "," : "") << p.v(j);
  os << "}";
  return os.str();
}

// Each check returns an empty string on success, else a failure description.
using Check = std::function<std::string()>;

std::string check_counting(int cap) {
  for (const auto& p : grid())
    for (int n = 0; n <= cap; ++n) {
      int k = 0, f = 0;
      for (const auto& m : enumerate_multipartitions(p.d(), n)) {
        k += is_kleshchev(m, p);
        f += is_flotw(m, p);
      }
      if (k != f) return label(p) + " n=" + std::to_string(n) + ": Kleshchev " + std::to_string(k) + " vs FLOTW " + std::to_string(f);
    }
  return {};
}

std::string check_regular(int cap) {
  for (int e : {2, 3}) {
    const auto p = ChargeParams::make(1, e, {0});
    for (int n = 0; n <= cap; ++n)
      for (const auto& m : enumerate_multipartitions(1, n)) {
        const bool r = is_e_regular(m[0], e);
        if (is_kleshchev(m, p) != r || is_flotw(m, p) != r)
          return "e=" + std::to_string(e) + " " + format_multipartition(m);
      }
  }
  return {};
}

std::string check_a_oracle(int cap) {
  for (const auto& p : grid())
    for (int n = 0; n <= cap; ++n)
      for (const auto& m : enumerate_multipartitions(p.d(), n)) {
        const auto a = a_value(m, p);
        if (a.value() != Rational(-schur_valuation(m, p), p.d())) return label(p) + " " + format_multipartition(m);
        for (int k = 1; k <= 2; ++k)
          if (a_value(m, p, k) != a) return "shift k=" + std::to_string(k) + " " + format_multipartition(m);
      }
  return {};
}

std::string check_shift_invariance(int cap) {
  for (const auto& p : grid()) {
    const auto q = p.with_shift(p.s() + 1);
    for (int n = 0; n <= cap; ++n) {
      const auto all = enumerate_multipartitions(p.d(), n);
      for (const auto& x : all)
        for (const auto& y : all)
          if (prec(to_multicomposition(x), to_multicomposition(y), p) !=
              prec(to_multicomposition(x), to_multicomposition(y), q))
            return label(p) + " prec " + format_multipartition(x) + " vs " + format_multipartition(y);
      for (const auto& x : all)
        for (int k = 0; k < p.e(); ++k) {
          const auto mc = to_multicomposition(x);
          bool any = false;
          for (const auto& node : addable_nodes(mc)) any = any || residue(node, p) == k;
          if (any && k_opt_add(mc, k, p).second != k_opt_add(mc, k, q).second)
            return label(p) + " k-opt " + format_multipartition(x);
        }
    }
  }
  return {};
}

std::string check_divided(int cap) {
  for (const auto& p : grid())
    for (auto order : {NodeOrder::AM, NodeOrder::FLOTW})
      for (int n = 0; n <= cap; ++n)
        for (const auto& m : enumerate_multipartitions(p.d(), n))
          for (int i = 0; i < p.e(); ++i) {
            FockVector iter = FockVector::basis(m);
            for (int j = 1; j <= 3; ++j) {
              iter = f_action(iter, i, order, p);
              const auto div = f_divided(FockVector::basis(m), i, j, order, p);
              if (div * gauss_factorial(j) != iter || iter.divide_exact(gauss_factorial(j)) != div)
                return label(p) + " " + format_multipartition(m) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
            }
          }
  return {};
}

std::string check_minimality(int cap) {
  for (const auto& p : {ChargeParams::make(2, 4, {0, 1}), ChargeParams::make(2, 2, {0, 1})})
    for (int n = 0; n <= cap; ++n)
      for (const auto& m : enumerate_multipartitions(p.d(), n)) {
        if (!is_flotw(m, p)) continue;
        const auto a = a_value(m, p);
        for (const auto& mu : realizations(a_sequence(m, p).residues, p))
          if (mu != m && !(a < a_value(mu, p))) return label(p) + " " + format_multipartition(m);
      }
  return {};
}

std::string check_canonical(int cap) {
  for (const auto& p : {ChargeParams::make(2, 4, {0, 1}), ChargeParams::make(2, 2, {0, 1})})
    for (int n = 0; n <= cap; ++n) {
      const auto m = decomposition_matrix(p, n);
      simple_module_a_values(m);
      for (std::size_t c = 0; c < m.cols.size(); ++c)
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
          if (m.entries[r][c] < 0) return "negative entry";
          if (m.entries[r][c] != 0 && m.rows[r] != m.cols[c] && !(m.row_a[r] > m.col_a[c]))
            return label(p) + " n=" + std::to_string(n) + " triangularity";
        }
      for (int t = 0; t <= n; ++t)
        if (is_semisimple(p, t) && !decomposition_matrix(p, t).is_identity()) return "semisimple matrix not identity";
    }
  return {};
}

std::string check_typeB(int cap) {
  for (int e : {2, 4}) {
    const auto p = typeB_params(e);
    for (int n = 0; n <= cap; ++n)
      for (const auto& m : enumerate_multipartitions(2, n)) {
        const auto a = a_value(m, p).value();
        for (int r = m.height(); r <= m.height() + 2; ++r)
          if (Rational(a_value_typeB(m, r)) != a) return "e=" + std::to_string(e) + " " + format_multipartition(m);
      }
  }
  return {};
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyCaps& caps) {
  const std::vector<std::pair<std::string, Check>> checks = {
      {"kleshchev-flotw-counts", [&] { return check_counting(caps.counting); }},
      {"d1-regular-oracle", [&] { return check_regular(caps.regular); }},
      {"a-value-schur-oracle", [&] { return check_a_oracle(caps.a_oracle); }},
      {"shift-invariance", [&] { return check_shift_invariance(caps.invariance); }},
      {"divided-powers", [&] { return check_divided(caps.divided); }},
      {"a-graph-minimality", [&] { return check_minimality(caps.minimality); }},
      {"canonical-basis-shape", [&] { return check_canonical(caps.canonical); }},
      {"typeB-a-formula", [&] { return check_typeB(caps.typeB); }},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = fn();
      r.passed = r.detail.empty();
    } catch (const std::exception& ex) {
      r.detail = std::string("exception: ") + ex.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ariki
