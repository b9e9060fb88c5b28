#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace ariki {

// Integer Laurent polynomial in q. Zero coefficients are never stored;
// arithmetic is overflow-checked.
class LaurentPoly {
public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: integers promote to constants
  static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1);
  static LaurentPoly from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int exponent) const;
  // Only meaningful when nonzero.
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);

  // Multiplies by q^k.
  LaurentPoly shifted(int k) const;
  // P(q^{-1}).
  LaurentPoly bar() const;
  std::int64_t eval_at_one() const;
  // Exact quotient; throws DomainError when the divisor does not divide.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  bool is_bar_invariant() const { return bar() == *this; }
  // Every exponent is >= 1 (the zero polynomial qualifies).
  bool in_q_zq() const { return terms_.empty() || min_degree() >= 1; }
  bool has_nonnegative_exponents() const { return terms_.empty() || min_degree() >= 0; }

  bool operator==(const LaurentPoly& o) const = default;

  // "q^2 + 1 + q^-2" style, highest degree first; "0" for zero.
  std::string str() const;

private:
  void add_term(int exponent, std::int64_t coefficient);
  Terms terms_;
};

// Balanced quantum integers [j] = q^{j-1} + q^{j-3} + ... + q^{1-j}.
LaurentPoly gauss_number(int j);
LaurentPoly gauss_factorial(int j);
LaurentPoly gauss_binomial(int l, int j);

}  // namespace ariki
