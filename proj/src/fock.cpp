#include "ariki/fock.hpp"

#include "ariki/error.hpp"

namespace ariki {

LaurentPoly FockVector::coefficient(const Multipartition& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const Multipartition& m, const LaurentPoly& c) {
  if (c.is_zero()) return;
  if (!terms_.empty()) {
    const auto& first = terms_.begin()->first;
    if (first.rank() != m.rank() || first.d() != m.d())
      throw InvalidArgument("Fock vector terms must share rank and d");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector r = *this;
  r += o;
  return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
  FockVector r = *this;
  r -= o;
  return r;
}

FockVector FockVector::operator*(const LaurentPoly& c) const {
  FockVector r;
  for (const auto& [m, x] : terms_) r.add(m, x * c);
  return r;
}

FockVector FockVector::bar() const {
  FockVector r;
  for (const auto& [m, x] : terms_) r.add(m, x.bar());
  return r;
}

FockVector FockVector::divide_exact(const LaurentPoly& c) const {
  FockVector r;
  for (const auto& [m, x] : terms_) r.add(m, x.divide_exact(c));
  return r;
}

std::vector<Node> addable_i_nodes(const Multipartition& m, int i, const ChargeParams& p) {
  std::vector<Node> out;
  for (const auto& n : addable_nodes(m))
    if (residue(n, p) == i) out.push_back(n);
  return out;
}

std::vector<Node> removable_i_nodes(const Multipartition& m, int i, const ChargeParams& p) {
  std::vector<Node> out;
  for (const auto& n : removable_nodes(m))
    if (residue(n, p) == i) out.push_back(n);
  return out;
}

NodeCounts weights(const Multipartition& lambda, const ChargeParams& p) {
  if (lambda.d() != p.d()) throw InvalidArgument("multipartition and parameters disagree on d");
  NodeCounts w;
  w.n.assign(static_cast<std::size_t>(p.e()), 0);
  for (const auto& n : addable_nodes(lambda)) ++w.n[static_cast<std::size_t>(residue(n, p))];
  for (const auto& n : removable_nodes(lambda)) --w.n[static_cast<std::size_t>(residue(n, p))];
  for (int c = 0; c < lambda.d(); ++c)
    for (int a = 1; a <= lambda[c].height(); ++a)
      for (int b = 1; b <= lambda.part(c, a); ++b)
        if (residue({a, b, c}, p) == 0) ++w.n_frak_d;
  return w;
}

namespace {

void check_res(int i, const ChargeParams& p) {
  if (i < 0 || i >= p.e()) throw InvalidArgument("residue out of range");
}

int count_relative(const std::vector<Node>& nodes, const Node& gamma, bool below, NodeOrder order,
                   const ChargeParams& p) {
  int k = 0;
  for (const auto& n : nodes) {
    if (n == gamma) continue;
    if (below ? is_below(order, n, gamma, p) : is_below(order, gamma, n, p)) ++k;
  }
  return k;
}

// Cells of mu not in lambda (mu contains lambda).
std::vector<Node> skew_cells(const Multipartition& lambda, const Multipartition& mu) {
  std::vector<Node> out;
  for (int c = 0; c < mu.d(); ++c)
    for (int a = 1; a <= mu[c].height(); ++a)
      for (int b = lambda.part(c, a) + 1; b <= mu.part(c, a); ++b) out.push_back({a, b, c});
  return out;
}

void combinations(const std::vector<Node>& pool, int j, std::size_t start, std::vector<Node>& cur,
                  std::vector<std::vector<Node>>& out) {
  if (static_cast<int>(cur.size()) == j) {
    out.push_back(cur);
    return;
  }
  for (std::size_t t = start; t < pool.size(); ++t) {
    cur.push_back(pool[t]);
    combinations(pool, j, t + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int count_n_b(const Multipartition& lambda, const Node& gamma, NodeOrder order, const ChargeParams& p) {
  const int i = residue(gamma, p);
  return count_relative(addable_i_nodes(lambda, i, p), gamma, true, order, p) -
         count_relative(removable_i_nodes(lambda, i, p), gamma, true, order, p);
}

int count_n_a(const Multipartition& lambda, const Node& gamma, NodeOrder order, const ChargeParams& p) {
  const int i = residue(gamma, p);
  return count_relative(addable_i_nodes(lambda, i, p), gamma, false, order, p) -
         count_relative(removable_i_nodes(lambda, i, p), gamma, false, order, p);
}

int count_divided(const Multipartition& lambda, const Multipartition& mu, NodeOrder order, const ChargeParams& p) {
  const auto added = skew_cells(lambda, mu);
  if (added.empty()) return 0;
  const int i = residue(added.front(), p);
  const auto add_mu = addable_i_nodes(mu, i, p);
  const auto rem_la = removable_i_nodes(lambda, i, p);
  int n = 0;
  for (const auto& g : added) {
    if (residue(g, p) != i) throw InvalidArgument("added cells do not share a residue");
    n += count_relative(add_mu, g, true, order, p) - count_relative(rem_la, g, true, order, p);
  }
  return n;
}

FockVector f_action(const FockVector& v, int i, NodeOrder order, const ChargeParams& p) {
  check_res(i, p);
  FockVector out;
  for (const auto& [lambda, c] : v.terms())
    for (const auto& g : addable_i_nodes(lambda, i, p))
      out.add(add_node(lambda, g), c.shifted(count_n_b(lambda, g, order, p)));
  return out;
}

FockVector e_action(const FockVector& v, int i, NodeOrder order, const ChargeParams& p) {
  check_res(i, p);
  FockVector out;
  for (const auto& [lambda, c] : v.terms())
    for (const auto& g : removable_i_nodes(lambda, i, p))
      out.add(remove_node(lambda, g), c.shifted(-count_n_a(lambda, g, order, p)));
  return out;
}

FockVector f_divided(const FockVector& v, int i, int j, NodeOrder order, const ChargeParams& p) {
  check_res(i, p);
  if (j < 0) throw InvalidArgument("divided power exponent must be nonnegative");
  if (j == 0) return v;
  FockVector out;
  for (const auto& [lambda, c] : v.terms()) {
    // Distinct addable i-nodes never interfere (neighbours have residue i+-1),
    // so every j-subset can be added at once.
    const auto pool = addable_i_nodes(lambda, i, p);
    std::vector<std::vector<Node>> subsets;
    std::vector<Node> cur;
    combinations(pool, j, 0, cur, subsets);
    for (const auto& set : subsets) {
      Multipartition mu = lambda;
      for (const auto& g : set) mu = add_node(mu, g);
      out.add(mu, c.shifted(count_divided(lambda, mu, order, p)));
    }
  }
  return out;
}

}  // namespace ariki
