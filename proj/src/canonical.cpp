#include "ariki/canonical.hpp"

#include <algorithm>
#include <unordered_map>

#include "ariki/aseq.hpp"
#include "ariki/crystal.hpp"
#include "ariki/error.hpp"
#include "ariki/parallel.hpp"

namespace ariki {

namespace {

using AMap = std::unordered_map<Multipartition, AValue, MultipartitionHash>;

AMap a_values_of(const std::vector<Multipartition>& all, const ChargeParams& p) {
  auto vals = parallel_map(all.size(), [&](std::size_t i) { return a_value(all[i], p); });
  AMap out;
  for (std::size_t i = 0; i < all.size(); ++i) out.emplace(all[i], vals[i]);
  return out;
}

// Ascending a, ties canonical.
void sort_by_a(std::vector<Multipartition>& v, const AMap& a) {
  std::sort(v.begin(), v.end(), [&](const Multipartition& x, const Multipartition& y) {
    const auto ax = a.at(x), ay = a.at(y);
    if (ax != ay) return ax < ay;
    return canonical_before(x, y);
  });
}

// c_0 + sum_{k>0} c_{-k} (q^k + q^{-k}).
LaurentPoly bar_completion(const LaurentPoly& c) {
  LaurentPoly g;
  for (const auto& [k, x] : c.terms()) {
    if (k > 0) continue;
    g += LaurentPoly::monomial(k, x);
    if (k < 0) g += LaurentPoly::monomial(-k, x);
  }
  return g;
}

}  // namespace

FockVector compute_A(const Multipartition& lambda, const ChargeParams& p) {
  const ASequence seq = a_sequence(lambda, p);
  FockVector v = FockVector::basis(Multipartition::empty(p.d()));
  for (const auto& [k, a] : seq.blocks()) v = f_divided(v, k, a, NodeOrder::FLOTW, p);
  if (v.coefficient(lambda) != LaurentPoly(1)) throw InternalError("A(lambda) does not have leading coefficient 1");
  const AValue al = a_value(lambda, p);
  for (const auto& [mu, c] : v.terms())
    if (mu != lambda && !(a_value(mu, p) > al))
      throw InternalError("A(lambda) has a term whose a-value is not larger");
  return v;
}

std::vector<CanonicalBasisElement> canonical_basis(const ChargeParams& p, int n, CanonicalOptions opts) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  const auto all = enumerate_multipartitions(p.d(), n);
  const AMap a = a_values_of(all, p);

  std::vector<Multipartition> labels;
  for (const auto& m : all)
    if (is_flotw(m, p)) labels.push_back(m);
  // Decreasing a; equal-a labels never touch each other, so their relative
  // order is free.
  std::sort(labels.begin(), labels.end(), [&](const Multipartition& x, const Multipartition& y) {
    const auto ax = a.at(x), ay = a.at(y);
    if (ax != ay) return ax > ay;
    return opts.reverse_ties ? canonical_before(y, x) : canonical_before(x, y);
  });

  auto As = parallel_map(labels.size(), [&](std::size_t i) { return compute_A(labels[i], p); });

  std::unordered_map<Multipartition, FockVector, MultipartitionHash> done;
  for (std::size_t li = 0; li < labels.size(); ++li) {
    const auto& mu = labels[li];
    FockVector v = std::move(As[li]);
    int span = 1;
    for (const auto& [nu, c] : v.terms()) span = std::max(span, c.max_degree() - c.min_degree() + 1);
    const std::size_t cap = std::max<std::size_t>(1, labels.size()) * static_cast<std::size_t>(span + 1);

    for (std::size_t iter = 0;; ++iter) {
      if (iter > cap) throw InternalError("straightening did not terminate");
      std::optional<Multipartition> pick;
      for (const auto& [nu, c] : v.terms()) {
        if (nu == mu || c.in_q_zq() || !done.count(nu)) continue;
        if (!pick) {
          pick = nu;
          continue;
        }
        const auto an = a.at(nu), ap = a.at(*pick);
        const bool tie_first = opts.reverse_ties ? canonical_before(*pick, nu) : canonical_before(nu, *pick);
        if (an < ap || (an == ap && tie_first)) pick = nu;
      }
      if (!pick) break;
      const LaurentPoly g = bar_completion(v.coefficient(*pick));
      if (!g.is_bar_invariant()) throw InternalError("correction coefficient is not bar-invariant");
      v -= done.at(*pick) * g;
    }

    if (v.coefficient(mu) != LaurentPoly(1)) throw InternalError("canonical basis element lost its leading term");
    for (const auto& [nu, c] : v.terms()) {
      if (nu == mu) continue;
      if (!c.in_q_zq()) throw InternalError("canonical basis coefficient outside qZ[q]");
      if (!(a.at(nu) > a.at(mu))) throw InternalError("canonical basis element is not a-triangular");
    }
    done.emplace(mu, std::move(v));
  }

  sort_by_a(labels, a);
  std::vector<CanonicalBasisElement> out;
  out.reserve(labels.size());
  for (const auto& m : labels) out.push_back({m, a.at(m), std::move(done.at(m))});
  return out;
}

int DecompositionMatrix::row_index(const Multipartition& m) const {
  auto it = std::find(rows.begin(), rows.end(), m);
  return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
}

int DecompositionMatrix::col_index(const Multipartition& m) const {
  auto it = std::find(cols.begin(), cols.end(), m);
  return it == cols.end() ? -1 : static_cast<int>(it - cols.begin());
}

bool DecompositionMatrix::is_identity() const {
  if (rows != cols) return false;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (entries[r][c] != (r == c ? 1 : 0)) return false;
  return true;
}

DecompositionMatrix matrix_from_basis(const std::vector<CanonicalBasisElement>& basis, const ChargeParams& p, int n) {
  DecompositionMatrix m;
  auto all = enumerate_multipartitions(p.d(), n);
  const AMap a = a_values_of(all, p);
  sort_by_a(all, a);
  m.rows = all;
  for (const auto& r : m.rows) m.row_a.push_back(a.at(r));
  for (const auto& b : basis) {
    m.cols.push_back(b.label);
    m.col_a.push_back(b.a);
  }
  auto klabels = parallel_map(m.cols.size(), [&](std::size_t i) { return bijection_j_inverse(m.cols[i], p); });
  for (auto& k : klabels) m.col_kleshchev.emplace_back(std::move(k));
  m.graded.assign(m.rows.size(), std::vector<LaurentPoly>(m.cols.size()));
  m.entries.assign(m.rows.size(), std::vector<std::int64_t>(m.cols.size(), 0));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (const auto& [mu, coef] : basis[c].vector.terms()) {
      const int r = m.row_index(mu);
      if (r < 0) throw InternalError("basis vector term outside the row set");
      m.graded[static_cast<std::size_t>(r)][c] = coef;
      m.entries[static_cast<std::size_t>(r)][c] = coef.eval_at_one();
    }
  return m;
}

DecompositionMatrix decomposition_matrix(const ChargeParams& p, int n, CanonicalOptions opts) {
  return matrix_from_basis(canonical_basis(p, n, opts), p, n);
}

std::map<Multipartition, AValue, CanonicalOrder> simple_module_a_values(const DecompositionMatrix& m) {
  std::map<Multipartition, AValue, CanonicalOrder> out;
  for (std::size_t c = 0; c < m.cols.size(); ++c) {
    std::optional<AValue> least;
    for (std::size_t r = 0; r < m.rows.size(); ++r)
      if (m.entries[r][c] != 0 && (!least || m.row_a[r] < *least)) least = m.row_a[r];
    if (!least || *least != m.col_a[c]) throw InternalError("a-value of a simple module is not its column minimum");
    const Multipartition key = m.col_kleshchev[c] ? *m.col_kleshchev[c] : m.cols[c];
    out.emplace(key, m.col_a[c]);
  }
  return out;
}

std::map<Multipartition, AValue, CanonicalOrder> simple_module_a_values(const ChargeParams& p, int n) {
  return simple_module_a_values(decomposition_matrix(p, n));
}

}  // namespace ariki
