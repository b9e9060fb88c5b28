#pragma once

#include <map>
#include <vector>

#include "ariki/charge.hpp"
#include "ariki/laurent.hpp"
#include "ariki/partitions.hpp"

namespace ariki {

// Finitely supported map from multipartitions (all of one rank) to Laurent
// polynomials, iterated in canonical order.
class FockVector {
public:
  using Map = std::map<Multipartition, LaurentPoly, CanonicalOrder>;

  FockVector() = default;
  static FockVector basis(const Multipartition& m) {
    FockVector v;
    v.add(m, LaurentPoly(1));
    return v;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coefficient(const Multipartition& m) const;
  bool contains(const Multipartition& m) const { return terms_.count(m) != 0; }
  // -1 for the zero vector.
  int rank() const { return terms_.empty() ? -1 : terms_.begin()->first.rank(); }

  // Throws InvalidArgument when m's rank differs from the current support.
  void add(const Multipartition& m, const LaurentPoly& c);

  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector operator*(const LaurentPoly& c) const;
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);

  FockVector bar() const;
  // Coefficientwise exact division; throws DomainError if any is inexact.
  FockVector divide_exact(const LaurentPoly& c) const;

  bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

private:
  Map terms_;
};

// Addable/removable nodes of residue i.
std::vector<Node> addable_i_nodes(const Multipartition& m, int i, const ChargeParams& p);
std::vector<Node> removable_i_nodes(const Multipartition& m, int i, const ChargeParams& p);

// Diagonal weight data: n[i] = #addable i-nodes - #removable i-nodes and
// n_frak_d = number of 0-nodes in the diagram.
struct NodeCounts {
  std::vector<int> n;
  int n_frak_d = 0;
};

NodeCounts weights(const Multipartition& lambda, const ChargeParams& p);

// Exponent of mu = lambda + gamma in f_i lambda: addable minus removable
// i-nodes of lambda lying below gamma in the given order.
int count_n_b(const Multipartition& lambda, const Node& gamma, NodeOrder order, const ChargeParams& p);
// Exponent (negated) of mu = lambda - gamma in e_i lambda: addable minus
// removable i-nodes of lambda lying above gamma.
int count_n_a(const Multipartition& lambda, const Node& gamma, NodeOrder order, const ChargeParams& p);
// Exponent of mu in f_i^{(j)} lambda, where mu/lambda is a set of i-nodes:
// sum over added gamma of (#addable i-nodes of mu below gamma - #removable
// i-nodes of lambda below gamma).
int count_divided(const Multipartition& lambda, const Multipartition& mu, NodeOrder order, const ChargeParams& p);

FockVector f_action(const FockVector& v, int i, NodeOrder order, const ChargeParams& p);
FockVector e_action(const FockVector& v, int i, NodeOrder order, const ChargeParams& p);
FockVector f_divided(const FockVector& v, int i, int j, NodeOrder order, const ChargeParams& p);

}  // namespace ariki
