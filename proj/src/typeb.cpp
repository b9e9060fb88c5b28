#include "ariki/typeb.hpp"

#include <algorithm>
#include <map>

#include "ariki/crystal.hpp"
#include "ariki/error.hpp"

namespace ariki {

TypeBConfig TypeBConfig::make(int n, int e) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  if (e < 2) throw InvalidArgument("e must be at least 2");
  return {n, e, e % 2 ? TypeBMode::OddDJ : TypeBMode::EvenFLOTW};
}

ChargeParams typeB_params(int e) {
  if (e < 2 || e % 2) throw InvalidArgument("type B charges need an even e");
  return ChargeParams::make(2, e, {1, e / 2}, 0);
}

std::int64_t a_value_typeB(const Multipartition& bp, std::optional<int> r_opt) {
  if (bp.d() != 2) throw InvalidArgument("type B a-values need a bipartition");
  const int r = r_opt.value_or(bp.height());
  if (r < bp.height()) throw InvalidArgument("r is smaller than a component height");
  const std::int64_t rr = r;
  std::int64_t a = -(rr * (rr - 1) * (2 * rr + 5)) / 6;
  for (int i = 1; i <= r; ++i) a = checked_add(a, checked_mul(i - 1, bp.part(0, i) + bp.part(1, i) + 1));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j)
      a = checked_add(a, std::min<std::int64_t>(bp.part(0, i) + 1 + r - i, bp.part(1, j) + r - j));
  return a;
}

namespace {

void sort_typeB(std::vector<Multipartition>& v) {
  std::vector<std::pair<std::int64_t, Multipartition>> keyed;
  for (auto& m : v) keyed.emplace_back(a_value_typeB(m), std::move(m));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return canonical_before(x.second, y.second);
  });
  v.clear();
  for (auto& [k, m] : keyed) v.push_back(std::move(m));
}

}  // namespace

std::vector<Multipartition> canonical_basic_set_B(int n, int e) {
  const auto cfg = TypeBConfig::make(n, e);
  std::vector<Multipartition> out;
  if (cfg.mode == TypeBMode::OddDJ) {
    for (const auto& m : enumerate_multipartitions(2, n))
      if (is_e_regular(m[0], e) && is_e_regular(m[1], e)) out.push_back(m);
  } else {
    const auto p = typeB_params(e);
    for (const auto& m : enumerate_multipartitions(2, n))
      if (is_flotw(m, p)) out.push_back(m);
  }
  sort_typeB(out);
  return out;
}

DecompositionMatrix decomposition_matrix_B(int n, int e) {
  const auto cfg = TypeBConfig::make(n, e);
  if (cfg.mode == TypeBMode::EvenFLOTW) return decomposition_matrix(typeB_params(e), n);

  // Type A matrices for every size 0..n.
  const auto pa = ChargeParams::make(1, e, {0});
  std::vector<DecompositionMatrix> typeA;
  for (int k = 0; k <= n; ++k) typeA.push_back(decomposition_matrix(pa, k));
  auto lookup = [&](const Partition& row, const Partition& col) -> std::pair<LaurentPoly, std::int64_t> {
    const auto& m = typeA[static_cast<std::size_t>(row.rank())];
    const int r = m.row_index(Multipartition({row}));
    const int c = m.col_index(Multipartition({col}));
    if (r < 0 || c < 0) throw InternalError("type A factor missing from its matrix");
    return {m.graded[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], m.entry(static_cast<std::size_t>(r), static_cast<std::size_t>(c))};
  };

  DecompositionMatrix out;
  out.rows = enumerate_multipartitions(2, n);
  sort_typeB(out.rows);
  out.cols = canonical_basic_set_B(n, e);
  for (const auto& r : out.rows) out.row_a.push_back(AValue{a_value_typeB(r), 1});
  for (const auto& c : out.cols) {
    out.col_a.push_back(AValue{a_value_typeB(c), 1});
    out.col_kleshchev.emplace_back(std::nullopt);
  }
  out.graded.assign(out.rows.size(), std::vector<LaurentPoly>(out.cols.size()));
  out.entries.assign(out.rows.size(), std::vector<std::int64_t>(out.cols.size(), 0));
  for (std::size_t i = 0; i < out.rows.size(); ++i)
    for (std::size_t j = 0; j < out.cols.size(); ++j) {
      const auto& mu = out.rows[i];
      const auto& la = out.cols[j];
      if (mu[0].rank() != la[0].rank() || mu[1].rank() != la[1].rank()) continue;
      const auto [g0, d0] = lookup(mu[0], la[0]);
      const auto [g1, d1] = lookup(mu[1], la[1]);
      out.graded[i][j] = g0 * g1;
      out.entries[i][j] = checked_mul(d0, d1);
    }
  return out;
}

}  // namespace ariki
