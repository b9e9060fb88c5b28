#include "ariki/laurent.hpp"

#include <sstream>

#include "ariki/error.hpp"
#include "ariki/rational.hpp"

namespace ariki {

namespace {

int checked_exp(long long x) {
  if (x > (1 << 28) || x < -(1 << 28)) throw ArithmeticOverflow("Laurent exponent out of range");
  return static_cast<int>(x);
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coefficient) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const Terms& terms) {
  LaurentPoly p;
  for (const auto& [k, c] : terms) p.add_term(k, c);
  return p;
}

void LaurentPoly::add_term(int exponent, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, checked_sub(0, c));
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly() - *this; }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) r.add_term(checked_exp(static_cast<long long>(a) + b), checked_mul(x, y));
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [a, x] : terms_) r.terms_.emplace(checked_exp(static_cast<long long>(a) + k), x);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [a, x] : terms_) r.terms_.emplace(-a, x);
  return r;
}

std::int64_t LaurentPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (const auto& [a, x] : terms_) s = checked_add(s, x);
  return s;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  LaurentPoly rem = *this, quot;
  const int dlead = divisor.max_degree();
  const std::int64_t dc = divisor.coefficient(dlead);
  while (!rem.is_zero()) {
    const int lead = rem.max_degree();
    const std::int64_t c = rem.coefficient(lead);
    if (c % dc != 0 || lead - dlead < rem.min_degree() - divisor.min_degree())
      throw DomainError("Laurent polynomial division is not exact");
    const LaurentPoly t = monomial(lead - dlead, c / dc);
    quot += t;
    rem -= t * divisor;
  }
  return quot;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [k, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

LaurentPoly gauss_number(int j) {
  if (j < 0) throw InvalidArgument("quantum integer index must be nonnegative");
  LaurentPoly r;
  for (int t = 0; t < j; ++t) r += LaurentPoly::monomial(j - 1 - 2 * t);
  return r;
}

LaurentPoly gauss_factorial(int j) {
  if (j < 0) throw InvalidArgument("quantum factorial index must be nonnegative");
  LaurentPoly r(1);
  for (int t = 2; t <= j; ++t) r = r * gauss_number(t);
  return r;
}

LaurentPoly gauss_binomial(int l, int j) {
  if (j < 0 || l < j) throw InvalidArgument("quantum binomial needs 0 <= j <= l");
  return gauss_factorial(l).divide_exact(gauss_factorial(j) * gauss_factorial(l - j));
}

}  // namespace ariki
