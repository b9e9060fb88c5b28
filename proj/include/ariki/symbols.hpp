#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ariki/charge.hpp"
#include "ariki/partitions.hpp"
#include "ariki/rational.hpp"

namespace ariki {

// Rows B^(i)_j = lambda^(i)_j - j + h for j = 1..h, listed in that order
// (numerically decreasing when the source is a multipartition).
struct OrdinarySymbol {
  int height = 0;
  int source_rank = 0;
  std::vector<std::vector<std::int64_t>> rows;

  int d() const { return static_cast<int>(rows.size()); }
  std::int64_t sigma() const;
  std::int64_t tau() const;
  // Sum of all entries.
  std::int64_t abs() const;
};

// Rows of B^(i)_j + m^(i), each entry stored multiplied by `den`.
struct ShiftedSymbol {
  int height = 0;
  std::int64_t den = 1;
  std::vector<std::vector<std::int64_t>> scaled_rows;

  Rational entry(int i, int j) const;
};

OrdinarySymbol ordinary_symbol(const Multicomposition& m, int k = 0);
OrdinarySymbol ordinary_symbol(const Multipartition& m, int k = 0);

ShiftedSymbol shifted_symbol(const OrdinarySymbol& b, const ChargeParams& p);
// Arbitrary nonnegative rational weights, one per component.
ShiftedSymbol shifted_symbol(const OrdinarySymbol& b, const std::vector<Rational>& m);

std::string format_symbol(const OrdinarySymbol& b);
std::string format_symbol(const ShiftedSymbol& b);

// a-value as numerator over the fixed denominator d.
struct AValue {
  std::int64_t numerator = 0;
  int denominator = 1;

  Rational value() const { return Rational(numerator, denominator); }
  bool operator==(const AValue& o) const { return value() == o.value(); }
  std::strong_ordering operator<=>(const AValue& o) const { return value() <=> o.value(); }
  // "p/q" reduced, or "p" when integral.
  std::string str() const { return value().str(); }
};

// y-adic valuation of the Schur element, factor by factor. k is the symbol
// shift; the result does not depend on it.
std::int64_t schur_valuation(const Multipartition& lambda, const ChargeParams& p, int k = 0);
// (-1)^sigma_B of the Schur element; unused by a-values.
int schur_sign(const Multipartition& lambda, const ChargeParams& p, int k = 0);

AValue a_value(const Multipartition& lambda, const ChargeParams& p, int k = 0);

// d-scaled statistic whose order on equal-rank inputs of common height h
// matches the a-function. h must be at least the largest component height.
std::int64_t precedence_statistic(const Multicomposition& m, const ChargeParams& p, int h);

// mu precedes nu. Both are padded to their common height first.
bool prec(const Multicomposition& mu, const Multicomposition& nu, const ChargeParams& p);

}  // namespace ariki
