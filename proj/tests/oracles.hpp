// Test-side reference computations. Written from the definitions, without
// calling the library routines they are compared against.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ariki/partitions.hpp"
#include "ariki/rational.hpp"

namespace oracle {

// Number of partitions of k for k = 0..n (coin-change recurrence).
inline std::vector<std::int64_t> partition_counts(int n) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int k = part; k <= n; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - part)];
  return c;
}

// Coefficient of x^n in P(x)^d.
inline std::int64_t multipartition_count(int d, int n) {
  const auto p = partition_counts(n);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n) + 1, 0);
  acc[0] = 1;
  for (int t = 0; t < d; ++t) {
    std::vector<std::int64_t> next(acc.size(), 0);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b)
        next[static_cast<std::size_t>(a + b)] += acc[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)];
    acc = next;
  }
  return acc[static_cast<std::size_t>(n)];
}

inline std::vector<int> parts_of(const ariki::Partition& p) { return {p.parts().begin(), p.parts().end()}; }

inline bool e_regular(const std::vector<int>& parts, int e) {
  std::map<int, int> mult;
  for (int x : parts) ++mult[x];
  for (const auto& [v, m] : mult)
    if (m >= e) return false;
  return true;
}

// Cells counted column by column.
inline std::vector<int> transpose(const std::vector<int>& parts) {
  std::vector<int> out;
  for (int col = 1; !parts.empty() && col <= parts.front(); ++col)
    out.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [&](int x) { return x >= col; })));
  return out;
}

inline std::int64_t classical_a(const std::vector<int>& parts) {
  std::int64_t a = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) a += static_cast<std::int64_t>(i) * parts[i];
  return a;
}

inline int part(const std::vector<int>& p, int i) { return i >= 1 && i <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i - 1)] : 0; }

// Closed type-B formula, evaluated in rationals.
inline ariki::Rational typeB_a(const std::vector<int>& l0, const std::vector<int>& l1, int r) {
  using ariki::Rational;
  Rational a(-static_cast<std::int64_t>(r) * (r - 1) * (2 * r + 5), 6);
  for (int i = 1; i <= r; ++i) a = a + Rational((i - 1) * (part(l0, i) + part(l1, i) + 1));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) a = a + Rational(std::min(part(l0, i) + 1 + r - i, part(l1, j) + r - j));
  return a;
}

// a-value from the y-adic valuation of the Schur element, with the weights
// m^(j) = v_j - je/d + se kept as rationals and the parameters
// u_j = y^{d m^(j)} eta_d^j, v = y^d. Each factor y^A z - y^B z' with
// (A, z) != (B, z') contributes min(A, B).
inline ariki::Rational a_from_schur(const ariki::Multipartition& lam, int e, std::span<const int> v, int s) {
  using ariki::Rational;
  const int d = lam.d();
  int h = 0, n = 0;
  for (int i = 0; i < d; ++i) {
    h = std::max(h, lam[i].height());
    n += lam[i].rank();
  }
  std::vector<Rational> m;
  for (int j = 0; j < d; ++j) m.push_back(Rational(v[static_cast<std::size_t>(j)]) - Rational(j * e, d) + Rational(s * e));
  // Symbol rows.
  std::vector<std::vector<std::int64_t>> B(static_cast<std::size_t>(d));
  std::int64_t absB = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 1; j <= h; ++j) {
      B[static_cast<std::size_t>(i)].push_back(lam.part(i, j) - j + h);
      absB += B[static_cast<std::size_t>(i)].back();
    }
  std::int64_t tau = 0;
  for (int t = 1; t < h; ++t) tau += static_cast<std::int64_t>(d * t + 1) * (d * t) / 2;

  Rational sum_m;
  for (const auto& x : m) sum_m = sum_m + x;
  const Rational dd(d);
  auto emin = [](const Rational& a, const Rational& b) { return a < b ? a : b; };

  // Valuation (in powers of y) of the Schur element.
  Rational val = dd * Rational(tau - absB + n) - Rational(n) * dd * sum_m;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) val = val + Rational(h) * emin(dd * m[i], dd * m[j]);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (auto alpha : B[static_cast<std::size_t>(i)])
        for (std::int64_t k = 1; k <= alpha; ++k) val = val + emin(dd * (Rational(k) + m[i]), dd * m[j]);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (auto alpha : B[static_cast<std::size_t>(i)])
        for (auto beta : B[static_cast<std::size_t>(j)]) {
          if (i == j && alpha <= beta) continue;
          val = val - emin(dd * (Rational(alpha) + m[i]), dd * (Rational(beta) + m[j]));
        }
  return Rational(0) - val * Rational(1, d);
}

}  // namespace oracle
