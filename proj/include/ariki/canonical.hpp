#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ariki/charge.hpp"
#include "ariki/fock.hpp"
#include "ariki/partitions.hpp"
#include "ariki/symbols.hpp"

namespace ariki {

// f_{i_s}^{(a_s)} ... f_{i_1}^{(a_1)} applied to empty (JMMO action), where
// i_1^{a_1} ... i_s^{a_s} is the block form of lambda's a-sequence.
FockVector compute_A(const Multipartition& lambda, const ChargeParams& p);

struct CanonicalBasisElement {
  Multipartition label;
  AValue a;
  FockVector vector;
};

struct CanonicalOptions {
  // Walk equal-a labels and equal-a correction candidates in reverse
  // canonical order. The basis must not change.
  bool reverse_ties = false;
};

// Elements sorted by ascending a-value, ties in canonical order.
std::vector<CanonicalBasisElement> canonical_basis(const ChargeParams& p, int n, CanonicalOptions opts = {});

struct DecompositionMatrix {
  std::vector<Multipartition> rows;
  std::vector<AValue> row_a;
  std::vector<Multipartition> cols;
  std::vector<AValue> col_a;
  // Kleshchev label j^{-1}(col) when defined for the parameters in use.
  std::vector<std::optional<Multipartition>> col_kleshchev;
  std::vector<std::vector<LaurentPoly>> graded;
  std::vector<std::vector<std::int64_t>> entries;

  std::int64_t entry(std::size_t r, std::size_t c) const { return entries.at(r).at(c); }
  // Row index of a label, or -1.
  int row_index(const Multipartition& m) const;
  int col_index(const Multipartition& m) const;
  bool is_identity() const;
};

// Rows: every d-partition of rank n; columns: FLOTW labels. Both sorted by
// ascending a-value, ties in canonical order.
DecompositionMatrix decomposition_matrix(const ChargeParams& p, int n, CanonicalOptions opts = {});
DecompositionMatrix matrix_from_basis(const std::vector<CanonicalBasisElement>& basis, const ChargeParams& p, int n);

// a_M for each simple module, keyed by its Kleshchev label. Throws
// InternalError if a_M differs from the least a-value in its column.
std::map<Multipartition, AValue, CanonicalOrder> simple_module_a_values(const ChargeParams& p, int n);
std::map<Multipartition, AValue, CanonicalOrder> simple_module_a_values(const DecompositionMatrix& m);

}  // namespace ariki
