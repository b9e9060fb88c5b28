#include "ariki/aseq.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ariki/crystal.hpp"
#include "ariki/error.hpp"

namespace ariki {

std::vector<std::pair<int, int>> ASequence::blocks() const {
  std::vector<std::pair<int, int>> out;
  for (int r : residues) {
    if (!out.empty() && out.back().first == r)
      ++out.back().second;
    else
      out.emplace_back(r, 1);
  }
  return out;
}

std::string ASequence::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
  return os.str();
}

namespace {

struct Border {
  Node node;
  int res;
  bool removable;
};

std::vector<Border> border_info(const Multipartition& lambda, const ChargeParams& p) {
  const auto rem = removable_nodes(lambda);
  std::vector<Border> out;
  for (const auto& n : border_nodes(lambda))
    out.push_back({n, residue(n, p), std::find(rem.begin(), rem.end(), n) != rem.end()});
  return out;
}

bool qualifies(const std::vector<Border>& border, int lmax, int k, int e) {
  const int below = (k + e - 1) % e;
  bool has = false;
  for (const auto& b : border) {
    if (b.node.col != lmax) continue;
    if (b.res == below) return false;
    if (b.res == k && b.removable) has = true;
  }
  return has;
}

}  // namespace

std::vector<int> peelable_residues(const Multipartition& lambda, const ChargeParams& p) {
  if (lambda.is_empty()) return {};
  const auto border = border_info(lambda, p);
  int lmax = 0;
  for (const auto& b : border) lmax = std::max(lmax, b.node.col);
  std::vector<int> out;
  for (int k = 0; k < p.e(); ++k)
    if (qualifies(border, lmax, k, p.e())) out.push_back(k);
  return out;
}

ASequence a_sequence(const Multipartition& lambda, const ChargeParams& p, ResidueChoice choice) {
  if (!is_flotw(lambda, p)) throw DomainError("a-sequence needs a FLOTW multipartition");
  std::vector<std::vector<int>> chunks;
  Multipartition cur = lambda;
  while (!cur.is_empty()) {
    const auto ks = peelable_residues(cur, p);
    if (ks.empty()) throw InternalError("no residue can be peeled from a FLOTW multipartition");
    const int k = choice == ResidueChoice::Smallest ? ks.front() : ks.back();
    const int below = (k + p.e() - 1) % p.e();
    const auto border = border_info(cur, p);
    int threshold = 0;
    for (const auto& b : border)
      if (b.res == below) threshold = std::max(threshold, b.node.col);
    int removed = 0;
    Multipartition next = cur;
    for (const auto& b : border)
      if (b.res == k && b.removable && b.node.col > threshold) {
        next = remove_node(next, b.node);
        ++removed;
      }
    chunks.emplace_back(static_cast<std::size_t>(removed), k);
    cur = next;
  }
  ASequence s;
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) s.residues.insert(s.residues.end(), it->begin(), it->end());
  return s;
}

std::pair<Multicomposition, Node> k_opt_add(const Multicomposition& m, int k, const ChargeParams& p) {
  if (m.d() != p.d()) throw InvalidArgument("multicomposition and parameters disagree on d");
  if (k < 0 || k >= p.e()) throw InvalidArgument("residue out of range");
  std::optional<Node> best;
  long long best_val = 0;
  for (const auto& n : addable_nodes(m)) {
    if (residue(n, p) != k) continue;
    const long long val = static_cast<long long>(p.d()) * (n.col - 1 - n.row) + p.scaled_m(n.comp);
    // addable_nodes lists (component, row) ascending, so strict > keeps the
    // smallest position on ties.
    if (!best || val > best_val) {
      best = n;
      best_val = val;
    }
  }
  if (!best) throw DomainError("no addable node of the requested residue");
  return {add_node(m, *best), *best};
}

Multipartition AGraph::final_stage() const {
  return steps.empty() ? start : steps.back().after;
}

AGraph a_graph(const Multipartition& lambda, const ChargeParams& p) {
  const ASequence seq = a_sequence(lambda, p);
  AGraph g;
  g.start = Multipartition::empty(p.d());
  Multicomposition cur = Multicomposition::empty(p.d());
  for (int k : seq.residues) {
    auto [next, node] = k_opt_add(cur, k, p);
    Multipartition before = to_multipartition(cur), after;
    try {
      after = to_multipartition(next);
    } catch (const InvalidArgument&) {
      throw InternalError("k-opt addition left the set of multipartitions");
    }
    g.steps.push_back({before, node, k, after});
    cur = std::move(next);
  }
  if (to_multipartition(cur) != lambda) throw InternalError("a-graph replay does not end at the input");
  return g;
}

std::vector<Multipartition> realizations(const std::vector<int>& residues, const ChargeParams& p) {
  std::set<Multipartition, CanonicalOrder> cur{Multipartition::empty(p.d())};
  for (int k : residues) {
    std::set<Multipartition, CanonicalOrder> next;
    for (const auto& m : cur)
      for (const auto& n : addable_nodes(m))
        if (residue(n, p) == k) next.insert(add_node(m, n));
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

std::vector<Multicomposition> composition_realizations(const std::vector<int>& residues, const ChargeParams& p) {
  std::set<Multicomposition, CanonicalOrder> cur{Multicomposition::empty(p.d())};
  for (int k : residues) {
    std::set<Multicomposition, CanonicalOrder> next;
    for (const auto& m : cur)
      for (const auto& n : addable_nodes(m))
        if (residue(n, p) == k) next.insert(add_node(m, n));
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

}  // namespace ariki
