#include "ariki/crystal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "ariki/error.hpp"
#include "ariki/fock.hpp"
#include "ariki/parallel.hpp"

namespace ariki {

Signature signature(const Multipartition& lambda, int i, NodeOrder order, const ChargeParams& p) {
  if (lambda.d() != p.d()) throw InvalidArgument("multipartition and parameters disagree on d");
  if (i < 0 || i >= p.e()) throw InvalidArgument("residue out of range");
  Signature s;
  s.residue = i;
  for (const auto& n : addable_i_nodes(lambda, i, p)) s.entries.push_back({n, true});
  for (const auto& n : removable_i_nodes(lambda, i, p)) s.entries.push_back({n, false});
  std::sort(s.entries.begin(), s.entries.end(), [&](const SignatureEntry& x, const SignatureEntry& y) {
    return is_below(order, x.node, y.node, p);
  });
  return s;
}

namespace {

struct Reduced {
  std::vector<Node> addable;    // surviving, low to high
  std::vector<Node> removable;  // surviving, low to high
};

Reduced reduce(const Signature& s) {
  Reduced r;
  for (const auto& e : s.entries) {
    if (e.addable)
      r.addable.push_back(e.node);
    else if (!r.addable.empty())
      r.addable.pop_back();
    else
      r.removable.push_back(e.node);
  }
  return r;
}

}  // namespace

std::optional<Node> good_addable_node(const Multipartition& lambda, int i, NodeOrder order, const ChargeParams& p) {
  auto r = reduce(signature(lambda, i, order, p));
  if (r.addable.empty()) return std::nullopt;
  return r.addable.front();
}

std::optional<Node> good_removable_node(const Multipartition& lambda, int i, NodeOrder order,
                                        const ChargeParams& p) {
  auto r = reduce(signature(lambda, i, order, p));
  if (r.removable.empty()) return std::nullopt;
  return r.removable.back();
}

namespace {

bool in_crystal_rec(const Multipartition& lambda, NodeOrder order, const ChargeParams& p,
                    std::unordered_map<Multipartition, bool, MultipartitionHash>& memo) {
  if (lambda.is_empty()) return true;
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  // Crystal operators preserve the connected component, so one good removal
  // decides membership.
  bool ok = false;
  for (int i = 0; i < p.e(); ++i) {
    if (auto g = good_removable_node(lambda, i, order, p)) {
      ok = in_crystal_rec(remove_node(lambda, *g), order, p, memo);
      break;
    }
  }
  memo.emplace(lambda, ok);
  return ok;
}

}  // namespace

bool in_crystal(const Multipartition& lambda, NodeOrder order, const ChargeParams& p) {
  if (lambda.d() != p.d()) throw InvalidArgument("multipartition and parameters disagree on d");
  std::unordered_map<Multipartition, bool, MultipartitionHash> memo;
  return in_crystal_rec(lambda, order, p, memo);
}

bool is_kleshchev(const Multipartition& lambda, const ChargeParams& p) {
  return in_crystal(lambda, NodeOrder::AM, p);
}

bool is_flotw(const Multipartition& lambda, const ChargeParams& p) {
  if (lambda.d() != p.d()) throw InvalidArgument("multipartition and parameters disagree on d");
  const int d = p.d();
  for (int j = 0; j + 1 < d; ++j) {
    const int shift = p.v(j + 1) - p.v(j);
    for (int i = 1; i <= lambda[j + 1].height(); ++i)
      if (lambda.part(j, i) < lambda.part(j + 1, i + shift)) return false;
  }
  const int wrap = p.e() + p.v(0) - p.v(d - 1);
  for (int i = 1; i <= lambda[0].height(); ++i)
    if (lambda.part(d - 1, i) < lambda.part(0, i + wrap)) return false;

  std::map<int, std::set<int>> ends;
  for (const auto& n : border_nodes(lambda)) ends[n.col].insert(residue(n, p));
  for (const auto& [len, res] : ends)
    if (static_cast<int>(res.size()) >= p.e()) return false;
  return true;
}

CrystalGraph crystal_graph(const ChargeParams& p, int n, NodeOrder order) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  CrystalGraph g;
  g.order = order;
  g.levels.push_back({Multipartition::empty(p.d())});
  for (int r = 0; r < n; ++r) {
    const auto& level = g.levels.back();
    auto out = parallel_map(level.size(), [&](std::size_t idx) {
      std::vector<CrystalEdge> edges;
      const auto& lam = level[idx];
      for (int i = 0; i < p.e(); ++i)
        if (auto node = good_addable_node(lam, i, order, p)) edges.push_back({lam, add_node(lam, *node), i, *node});
      return edges;
    });
    std::set<Multipartition, CanonicalOrder> next;
    for (auto& edges : out)
      for (auto& e : edges) {
        next.insert(e.to);
        g.edges.push_back(std::move(e));
      }
    g.levels.emplace_back(next.begin(), next.end());
  }
  return g;
}

std::vector<int> crystal_path(const Multipartition& lambda, NodeOrder order, const ChargeParams& p) {
  if (lambda.d() != p.d()) throw InvalidArgument("multipartition and parameters disagree on d");
  std::vector<int> path;
  Multipartition cur = lambda;
  while (!cur.is_empty()) {
    bool moved = false;
    for (int i = 0; i < p.e() && !moved; ++i)
      if (auto g = good_removable_node(cur, i, order, p)) {
        path.push_back(i);
        cur = remove_node(cur, *g);
        moved = true;
      }
    if (!moved) throw DomainError("multipartition is not in the crystal of the empty multipartition");
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Multipartition replay_path(const std::vector<int>& residues, int d, NodeOrder order, const ChargeParams& p) {
  Multipartition cur = Multipartition::empty(d);
  for (int i : residues) {
    auto g = good_addable_node(cur, i, order, p);
    if (!g) throw InternalError("crystal path cannot be replayed");
    cur = add_node(cur, *g);
  }
  return cur;
}

Multipartition bijection_j(const Multipartition& mu, const ChargeParams& p) {
  if (!is_kleshchev(mu, p)) throw DomainError("input is not a Kleshchev multipartition");
  return replay_path(crystal_path(mu, NodeOrder::AM, p), p.d(), NodeOrder::FLOTW, p);
}

Multipartition bijection_j_inverse(const Multipartition& nu, const ChargeParams& p) {
  if (!is_flotw(nu, p)) throw DomainError("input is not a FLOTW multipartition");
  return replay_path(crystal_path(nu, NodeOrder::FLOTW, p), p.d(), NodeOrder::AM, p);
}

}  // namespace ariki
