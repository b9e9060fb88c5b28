#include "ariki/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ariki {

namespace {

void require_positive(const std::vector<int>& parts) {
  for (int x : parts)
    if (x < 1) throw InvalidArgument("parts must be positive integers");
}

int part_at(std::span<const int> parts, int row) {
  if (row < 1 || row > static_cast<int>(parts.size())) return 0;
  return parts[static_cast<std::size_t>(row - 1)];
}

void check_comp(int d, const Node& n) {
  if (n.comp < 0 || n.comp >= d) throw InvalidArgument("node component out of range");
  if (n.row < 1 || n.col < 1) throw InvalidArgument("node row and column are 1-based");
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_positive(parts_);
}

int Composition::rank() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
int Composition::part(int row) const { return part_at(parts_, row); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_positive(parts_);
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
    throw InvalidArgument("partition parts must be weakly decreasing");
}

int Partition::rank() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
int Partition::part(int row) const { return part_at(parts_, row); }

std::size_t MultipartitionHash::operator()(const Multipartition& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& p : m.components()) {
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    h = (h ^ 0xff) * 0x100000001b3ULL;
  }
  return h;
}

Multicomposition to_multicomposition(const Multipartition& m) {
  std::vector<Composition> comps;
  comps.reserve(static_cast<std::size_t>(m.d()));
  for (const auto& p : m.components()) comps.push_back(p.as_composition());
  return Multicomposition(std::move(comps));
}

Multipartition to_multipartition(const Multicomposition& m) {
  std::vector<Partition> comps;
  comps.reserve(static_cast<std::size_t>(m.d()));
  for (const auto& c : m.components())
    comps.emplace_back(std::vector<int>(c.parts().begin(), c.parts().end()));
  return Multipartition(std::move(comps));
}

namespace {

template <class Part>
std::vector<std::vector<int>> raw(const MultiShape<Part>& m) {
  std::vector<std::vector<int>> out;
  for (const auto& p : m.components()) out.emplace_back(p.parts().begin(), p.parts().end());
  return out;
}

template <class Part>
MultiShape<Part> rebuild(std::vector<std::vector<int>> rows) {
  std::vector<Part> comps;
  comps.reserve(rows.size());
  for (auto& r : rows) comps.emplace_back(std::move(r));
  return MultiShape<Part>(std::move(comps));
}

}  // namespace

Multipartition add_node(const Multipartition& m, const Node& n) {
  check_comp(m.d(), n);
  if (n.col != m.part(n.comp, n.row) + 1 || (n.row > 1 && m.part(n.comp, n.row - 1) < n.col))
    throw InvalidArgument("node is not addable");
  auto rows = raw(m);
  auto& r = rows[static_cast<std::size_t>(n.comp)];
  if (n.row == static_cast<int>(r.size()) + 1)
    r.push_back(1);
  else
    ++r[static_cast<std::size_t>(n.row - 1)];
  return rebuild<Partition>(std::move(rows));
}

Multipartition remove_node(const Multipartition& m, const Node& n) {
  check_comp(m.d(), n);
  if (n.col != m.part(n.comp, n.row) || m.part(n.comp, n.row + 1) >= n.col)
    throw InvalidArgument("node is not removable");
  auto rows = raw(m);
  auto& r = rows[static_cast<std::size_t>(n.comp)];
  if (--r[static_cast<std::size_t>(n.row - 1)] == 0) r.pop_back();
  return rebuild<Partition>(std::move(rows));
}

Multicomposition add_node(const Multicomposition& m, const Node& n) {
  check_comp(m.d(), n);
  const int h = m[n.comp].height();
  if (n.row > h + 1 || n.col != m.part(n.comp, n.row) + 1)
    throw InvalidArgument("node does not extend a row");
  auto rows = raw(m);
  auto& r = rows[static_cast<std::size_t>(n.comp)];
  if (n.row == h + 1)
    r.push_back(1);
  else
    ++r[static_cast<std::size_t>(n.row - 1)];
  return rebuild<Composition>(std::move(rows));
}

bool contains(const Multipartition& m, const Node& n) {
  return n.comp >= 0 && n.comp < m.d() && n.row >= 1 && n.col >= 1 && n.col <= m.part(n.comp, n.row);
}

std::vector<Node> border_nodes(const Multicomposition& m) {
  std::vector<Node> out;
  for (int c = 0; c < m.d(); ++c)
    for (int a = 1; a <= m[c].height(); ++a) out.push_back({a, m.part(c, a), c});
  return out;
}

std::vector<Node> border_nodes(const Multipartition& m) {
  return border_nodes(to_multicomposition(m));
}

std::vector<Node> removable_nodes(const Multipartition& m) {
  std::vector<Node> out;
  for (int c = 0; c < m.d(); ++c)
    for (int a = 1; a <= m[c].height(); ++a)
      if (m.part(c, a + 1) < m.part(c, a)) out.push_back({a, m.part(c, a), c});
  return out;
}

std::vector<Node> addable_nodes(const Multipartition& m) {
  std::vector<Node> out;
  for (int c = 0; c < m.d(); ++c)
    for (int a = 1; a <= m[c].height() + 1; ++a)
      if (a == 1 || m.part(c, a - 1) > m.part(c, a)) out.push_back({a, m.part(c, a) + 1, c});
  return out;
}

std::vector<Node> addable_nodes(const Multicomposition& m) {
  std::vector<Node> out;
  for (int c = 0; c < m.d(); ++c)
    for (int a = 1; a <= m[c].height() + 1; ++a) out.push_back({a, m.part(c, a) + 1, c});
  return out;
}

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  if (p.empty()) return Partition{};
  for (int col = 1; col <= p.part(1); ++col) {
    int len = 0;
    while (p.part(len + 1) >= col) ++len;
    out.push_back(len);
  }
  return Partition(std::move(out));
}

bool dominates(const Multipartition& mu, const Multipartition& lambda) {
  if (mu.d() != lambda.d()) throw InvalidArgument("dominance needs equal d");
  if (mu.rank() != lambda.rank()) throw InvalidArgument("dominance needs equal rank");
  int mu_before = 0, la_before = 0;
  for (int j = 0; j < mu.d(); ++j) {
    const int rows = std::max(mu[j].height(), lambda[j].height());
    int mu_sum = mu_before, la_sum = la_before;
    if (mu_sum < la_sum) return false;
    for (int i = 1; i <= rows; ++i) {
      mu_sum += mu.part(j, i);
      la_sum += lambda.part(j, i);
      if (mu_sum < la_sum) return false;
    }
    mu_before += mu[j].rank();
    la_before += lambda[j].rank();
  }
  return true;
}

bool is_e_regular(const Partition& p, int e) {
  if (e < 1) throw InvalidArgument("e must be positive");
  int run = 0;
  for (int i = 1; i <= p.height(); ++i) {
    run = (i > 1 && p.part(i) == p.part(i - 1)) ? run + 1 : 1;
    if (run >= e) return false;
  }
  return true;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Multipartition> enumerate_multipartitions(int d, int n) {
  if (d < 1) throw InvalidArgument("d must be positive");
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  std::vector<std::vector<Partition>> by_rank;
  for (int k = 0; k <= n; ++k) by_rank.push_back(enumerate_partitions(k));

  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int comp, int left) {
    if (comp == d - 1) {
      for (const auto& p : by_rank[static_cast<std::size_t>(left)]) {
        cur.push_back(p);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int k = left; k >= 0; --k)
      for (const auto& p : by_rank[static_cast<std::size_t>(k)]) {
        cur.push_back(p);
        rec(comp + 1, left - k);
        cur.pop_back();
      }
  };
  rec(0, n);
  // The recursion emits rank-descending first components, which is not the
  // canonical order once parts compare lexicographically, so sort.
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

}  // namespace ariki
