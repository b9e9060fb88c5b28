#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ariki/canonical.hpp"
#include "ariki/charge.hpp"
#include "ariki/partitions.hpp"

namespace ariki {

enum class TypeBMode { OddDJ, EvenFLOTW };

struct TypeBConfig {
  int n = 0;
  int e = 2;
  TypeBMode mode = TypeBMode::EvenFLOTW;

  static TypeBConfig make(int n, int e);
};

// Charges (1, e/2) with s = 0, i.e. m = (1, 0). Requires even e.
ChargeParams typeB_params(int e);

// Closed formula for the a-value of a bipartition. r defaults to the larger
// component height and must not be smaller.
std::int64_t a_value_typeB(const Multipartition& bp, std::optional<int> r = std::nullopt);

// Sorted by ascending type-B a-value, ties canonical.
std::vector<Multipartition> canonical_basic_set_B(int n, int e);

// Rows: all bipartitions of n; columns: canonical_basic_set_B. For odd e the
// entries are products of two type-A decomposition numbers; for even e the
// d = 2 matrix at typeB_params(e) is returned.
DecompositionMatrix decomposition_matrix_B(int n, int e);

}  // namespace ariki
