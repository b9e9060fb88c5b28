#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ariki {

// Exact rational with a positive, reduced denominator.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  // "p" when integral, otherwise "p/q".
  std::string str() const;
  // Accepts "p" or "p/q".
  static Rational parse(const std::string& text);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Overflow-checked 64-bit helpers; throw ArithmeticOverflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace ariki
