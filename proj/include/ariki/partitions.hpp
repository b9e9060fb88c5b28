#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ariki/error.hpp"

namespace ariki {

// A cell (row, column, component) of a multipartition diagram. Rows and
// columns are 1-based, components 0-based.
struct Node {
  int row = 1;
  int col = 1;
  int comp = 0;

  auto operator<=>(const Node&) const = default;
};

// Finite sequence of positive integers, no ordering constraint.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int height() const { return static_cast<int>(parts_.size()); }
  int rank() const;
  bool empty() const { return parts_.empty(); }
  // 1-based; rows past the height read as 0.
  int part(int row) const;

  auto operator<=>(const Composition&) const = default;

private:
  std::vector<int> parts_;
};

// Weakly decreasing sequence of positive integers.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int height() const { return static_cast<int>(parts_.size()); }
  int rank() const;
  bool empty() const { return parts_.empty(); }
  int part(int row) const;

  Composition as_composition() const { return Composition(parts_); }

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
};

// A d-tuple of partitions (or compositions). Empty components are stored
// explicitly, so components().size() is always d.
template <class Part>
class MultiShape {
public:
  MultiShape() = default;
  explicit MultiShape(std::vector<Part> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw InvalidArgument("multipartition needs at least one component");
  }
  static MultiShape empty(int d) {
    if (d < 1) throw InvalidArgument("d must be positive");
    return MultiShape(std::vector<Part>(static_cast<std::size_t>(d)));
  }

  int d() const { return static_cast<int>(comps_.size()); }
  std::span<const Part> components() const { return comps_; }
  const Part& operator[](int c) const { return comps_.at(static_cast<std::size_t>(c)); }
  int part(int comp, int row) const { return (*this)[comp].part(row); }

  int rank() const {
    int r = 0;
    for (const auto& p : comps_) r += p.rank();
    return r;
  }
  // Largest component height.
  int height() const {
    int h = 0;
    for (const auto& p : comps_) h = std::max(h, p.height());
    return h;
  }
  bool is_empty() const { return rank() == 0; }

  auto operator<=>(const MultiShape&) const = default;

private:
  std::vector<Part> comps_;
};

using Multipartition = MultiShape<Partition>;
using Multicomposition = MultiShape<Composition>;

template <class Part>
int rank(const MultiShape<Part>& m) {
  return m.rank();
}

// Canonical order used for enumeration, FockVector iteration and every
// tie-break: lexicographic over the components, larger part sequences first.
// Under it (2) precedes (1,1) and ((1),()) precedes ((),(1)).
template <class Part>
bool canonical_before(const MultiShape<Part>& a, const MultiShape<Part>& b) {
  return b < a;
}

struct CanonicalOrder {
  template <class Part>
  bool operator()(const MultiShape<Part>& a, const MultiShape<Part>& b) const {
    return canonical_before(a, b);
  }
};

struct MultipartitionHash {
  std::size_t operator()(const Multipartition& m) const noexcept;
};

Multicomposition to_multicomposition(const Multipartition& m);
// Throws InvalidArgument if some component is not weakly decreasing.
Multipartition to_multipartition(const Multicomposition& m);

// Diagram edits. Adding requires the result to stay a multipartition.
Multipartition add_node(const Multipartition& m, const Node& n);
Multipartition remove_node(const Multipartition& m, const Node& n);
// Composition edit: extend row n.row of component n.comp (n.row may be one
// past the current height, which starts a new part).
Multicomposition add_node(const Multicomposition& m, const Node& n);

bool contains(const Multipartition& m, const Node& n);

// Rightmost node of every nonempty row.
std::vector<Node> border_nodes(const Multicomposition& m);
std::vector<Node> border_nodes(const Multipartition& m);
std::vector<Node> removable_nodes(const Multipartition& m);
std::vector<Node> addable_nodes(const Multipartition& m);
// Every position that extends a row of a composition, including the first
// cell of row height+1 in each component.
std::vector<Node> addable_nodes(const Multicomposition& m);

Partition conjugate(const Partition& p);

// Dominance order on d-partitions of equal d and rank (throws otherwise).
bool dominates(const Multipartition& mu, const Multipartition& lambda);

bool is_e_regular(const Partition& p, int e);

// Partitions of n, largest-first lexicographic (matching canonical order).
std::vector<Partition> enumerate_partitions(int n);
std::vector<Multipartition> enumerate_multipartitions(int d, int n);

}  // namespace ariki
