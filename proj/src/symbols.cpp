#include "ariki/symbols.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ariki/error.hpp"

namespace ariki {

namespace {

std::int64_t choose2(std::int64_t x) { return checked_mul(x, x - 1) / 2; }

std::int64_t min_sum_upto(std::int64_t alpha, std::int64_t d, std::int64_t lo, std::int64_t cap) {
  // sum_{k=1..alpha} min(d*k + lo, cap)
  std::int64_t s = 0;
  for (std::int64_t k = 1; k <= alpha; ++k) {
    const std::int64_t x = checked_add(checked_mul(d, k), lo);
    if (x >= cap) {
      s = checked_add(s, checked_mul(alpha - k + 1, cap));
      break;
    }
    s = checked_add(s, x);
  }
  return s;
}

// One binomial factor y^A eta^i - y^B eta^j. Distinct pairs never cancel, so
// the valuation is min(A, B).
std::int64_t factor_valuation(std::int64_t a, int i, std::int64_t b, int j) {
  if (a == b && i == j) throw InternalError("degenerate Schur factor");
  return std::min(a, b);
}

}  // namespace

std::int64_t OrdinarySymbol::sigma() const {
  const std::int64_t dd = d();
  return checked_add(checked_mul(choose2(dd), choose2(height)), checked_mul(source_rank, dd - 1));
}

std::int64_t OrdinarySymbol::tau() const {
  const std::int64_t dd = d();
  std::int64_t t = 0;
  for (std::int64_t s = 1; s < height; ++s) t = checked_add(t, choose2(checked_add(checked_mul(dd, s), 1)));
  return t;
}

std::int64_t OrdinarySymbol::abs() const {
  std::int64_t t = 0;
  for (const auto& r : rows)
    for (auto x : r) t = checked_add(t, x);
  return t;
}

Rational ShiftedSymbol::entry(int i, int j) const {
  return Rational(scaled_rows.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)), den);
}

OrdinarySymbol ordinary_symbol(const Multicomposition& m, int k) {
  if (k < 0) throw InvalidArgument("symbol shift k must be nonnegative");
  OrdinarySymbol b;
  b.height = m.height() + k;
  b.source_rank = m.rank();
  for (int i = 0; i < m.d(); ++i) {
    std::vector<std::int64_t> row;
    for (int j = 1; j <= b.height; ++j) row.push_back(static_cast<std::int64_t>(m.part(i, j)) - j + b.height);
    b.rows.push_back(std::move(row));
  }
  return b;
}

OrdinarySymbol ordinary_symbol(const Multipartition& m, int k) {
  return ordinary_symbol(to_multicomposition(m), k);
}

ShiftedSymbol shifted_symbol(const OrdinarySymbol& b, const ChargeParams& p) {
  if (p.d() != b.d()) throw InvalidArgument("symbol and parameters disagree on d");
  ShiftedSymbol s;
  s.height = b.height;
  s.den = p.d();
  for (int i = 0; i < b.d(); ++i) {
    std::vector<std::int64_t> row;
    for (auto x : b.rows[static_cast<std::size_t>(i)])
      row.push_back(checked_add(checked_mul(s.den, x), p.scaled_m(i)));
    s.scaled_rows.push_back(std::move(row));
  }
  return s;
}

ShiftedSymbol shifted_symbol(const OrdinarySymbol& b, const std::vector<Rational>& m) {
  if (static_cast<int>(m.size()) != b.d()) throw InvalidArgument("need one weight per component");
  std::int64_t den = 1;
  for (const auto& x : m) den = std::lcm(den, x.den());
  ShiftedSymbol s;
  s.height = b.height;
  s.den = den;
  for (int i = 0; i < b.d(); ++i) {
    const auto& w = m[static_cast<std::size_t>(i)];
    const std::int64_t add = checked_mul(w.num(), den / w.den());
    std::vector<std::int64_t> row;
    for (auto x : b.rows[static_cast<std::size_t>(i)]) row.push_back(checked_add(checked_mul(den, x), add));
    s.scaled_rows.push_back(std::move(row));
  }
  return s;
}

std::string format_symbol(const OrdinarySymbol& b) {
  std::ostringstream os;
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    os << "B(" << i << ") =";
    for (auto x : b.rows[i]) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

std::string format_symbol(const ShiftedSymbol& b) {
  std::ostringstream os;
  for (std::size_t i = 0; i < b.scaled_rows.size(); ++i) {
    os << "B'(" << i << ") =";
    for (std::size_t j = 0; j < b.scaled_rows[i].size(); ++j)
      os << ' ' << b.entry(static_cast<int>(i), static_cast<int>(j)).str();
    os << '\n';
  }
  return os.str();
}

std::int64_t schur_valuation(const Multipartition& lambda, const ChargeParams& p, int k) {
  if (lambda.d() != p.d()) throw InvalidArgument("multipartition and parameters disagree on d");
  const OrdinarySymbol b = ordinary_symbol(lambda, k);
  const int d = p.d();
  const std::int64_t h = b.height;
  const std::int64_t n = lambda.rank();
  const auto sm = p.scaled_m();
  const std::int64_t sum_m = std::accumulate(sm.begin(), sm.end(), std::int64_t{0});

  // Monomial prefactor.
  std::int64_t val = checked_sub(checked_mul(d, checked_add(checked_sub(b.tau(), b.abs()), n)), checked_mul(n, sum_m));

  // prod_{i<j} (u_i - u_j)^h
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) val = checked_add(val, checked_mul(h, factor_valuation(sm[i], i, sm[j], j)));

  // theta: prod_{i,j} prod_{alpha in B^(i)} prod_{1<=k<=alpha} (y^{dk} u_i - u_j)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (auto alpha : b.rows[static_cast<std::size_t>(i)]) {
        if (i == j) {
          // y^{dk} u_i - u_i: k >= 1 keeps the exponents apart.
          for (std::int64_t kk = 1; kk <= alpha; ++kk)
            val = checked_add(val, factor_valuation(checked_mul(d, kk) + sm[i], i, sm[j], j));
        } else {
          val = checked_add(val, min_sum_upto(alpha, d, sm[i], sm[j]));
        }
      }

  // delta: prod_{i<=j} prod_{(alpha,beta), alpha>beta if i=j} (y^{d alpha} u_i - y^{d beta} u_j)
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (auto alpha : b.rows[static_cast<std::size_t>(i)])
        for (auto beta : b.rows[static_cast<std::size_t>(j)]) {
          if (i == j && !(alpha > beta)) continue;
          val = checked_sub(val, factor_valuation(checked_add(checked_mul(d, alpha), sm[i]), i,
                                                  checked_add(checked_mul(d, beta), sm[j]), j));
        }
  return val;
}

int schur_sign(const Multipartition& lambda, const ChargeParams& p, int k) {
  if (lambda.d() != p.d()) throw InvalidArgument("multipartition and parameters disagree on d");
  return ordinary_symbol(lambda, k).sigma() % 2 == 0 ? 1 : -1;
}

AValue a_value(const Multipartition& lambda, const ChargeParams& p, int k) {
  if (lambda.d() != p.d()) throw InvalidArgument("multipartition and parameters disagree on d");
  const OrdinarySymbol b = ordinary_symbol(lambda, k);
  const int d = p.d();
  const std::int64_t n = lambda.rank();
  const auto sm = p.scaled_m();
  // d*a = n*sum(dm) - d*tau + d*|B| - d*n - h*sum_{i<j} min(dm_i, dm_j) + statistic
  std::int64_t num = checked_mul(n, std::accumulate(sm.begin(), sm.end(), std::int64_t{0}));
  num = checked_sub(num, checked_mul(d, checked_add(checked_sub(b.tau(), b.abs()), n)));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) num = checked_sub(num, checked_mul(b.height, std::min(sm[i], sm[j])));
  num = checked_add(num, precedence_statistic(to_multicomposition(lambda), p, b.height));
  return AValue{num, d};
}

std::int64_t precedence_statistic(const Multicomposition& m, const ChargeParams& p, int h) {
  if (m.d() != p.d()) throw InvalidArgument("multicomposition and parameters disagree on d");
  if (h < m.height()) throw InvalidArgument("symbol height below the largest component height");
  const int d = p.d();
  const auto sm = p.scaled_m();
  std::vector<std::vector<std::int64_t>> rows;
  for (int i = 0; i < d; ++i) {
    std::vector<std::int64_t> r;
    for (int j = 1; j <= h; ++j) r.push_back(static_cast<std::int64_t>(m.part(i, j)) - j + h);
    rows.push_back(std::move(r));
  }
  std::int64_t s = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int x = 0; x < h; ++x)
        for (int y = (i == j ? x + 1 : 0); y < h; ++y)
          s = checked_add(s, std::min(checked_add(checked_mul(d, rows[i][x]), sm[i]),
                                      checked_add(checked_mul(d, rows[j][y]), sm[j])));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (auto alpha : rows[static_cast<std::size_t>(i)]) s = checked_sub(s, min_sum_upto(alpha, d, sm[i], sm[j]));
  return s;
}

bool prec(const Multicomposition& mu, const Multicomposition& nu, const ChargeParams& p) {
  if (mu.d() != nu.d()) throw InvalidArgument("prec needs equal d");
  if (mu.rank() != nu.rank()) throw InvalidArgument("prec needs equal rank");
  const int h = std::max(mu.height(), nu.height());
  return precedence_statistic(mu, p, h) < precedence_statistic(nu, p, h);
}

}  // namespace ariki
