#include "ariki/charge.hpp"

#include <algorithm>

#include "ariki/error.hpp"

namespace ariki {

ChargeParams ChargeParams::make(int d, int e, std::vector<int> v, std::optional<int> s) {
  if (d < 1) throw InvalidArgument("d must be at least 1");
  if (e < 2) throw InvalidArgument("e must be at least 2");
  if (static_cast<int>(v.size()) != d) throw InvalidArgument("expected exactly d charges");
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] < 0 || v[j] >= e) throw InvalidArgument("charges must lie in [0, e)");
    if (j > 0 && v[j] < v[j - 1]) throw InvalidArgument("charges must be weakly increasing");
  }
  if (s && *s < 0) throw InvalidArgument("shift s must be nonnegative");
  // Bounded well inside int: d*e*s stays small for any sane input.
  if (d > 1000 || e > 1000000 || (s && *s > 1000000)) throw InvalidArgument("parameters too large");

  ChargeParams p;
  p.d_ = d;
  p.e_ = e;
  p.v_ = std::move(v);
  auto weights = [&](int shift) {
    std::vector<int> out(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
      out[static_cast<std::size_t>(j)] = d * p.v_[static_cast<std::size_t>(j)] - j * e + shift * d * e;
    return out;
  };
  int shift = 0;
  if (s) {
    shift = *s;
  } else {
    while (true) {
      auto w = weights(shift);
      if (*std::min_element(w.begin(), w.end()) >= 0) break;
      ++shift;
    }
  }
  p.s_ = shift;
  p.scaled_m_ = weights(shift);
  if (*std::min_element(p.scaled_m_.begin(), p.scaled_m_.end()) < 0)
    throw InvalidArgument("shift s too small: some weight m^(j) is negative");
  return p;
}

int residue_mod(long long x, int e) {
  const long long r = x % e;
  return static_cast<int>(r < 0 ? r + e : r);
}

int residue(const Node& n, const ChargeParams& p) {
  if (n.comp < 0 || n.comp >= p.d()) throw InvalidArgument("node component out of range");
  return residue_mod(static_cast<long long>(n.col) - n.row + p.v(n.comp), p.e());
}

bool am_below(const Node& g, const Node& g2, const ChargeParams&) {
  return g.comp < g2.comp || (g.comp == g2.comp && g.row < g2.row);
}

bool flotw_above(const Node& g, const Node& g2, const ChargeParams& p) {
  const long long x = static_cast<long long>(g.col) - g.row + p.v(g.comp);
  const long long y = static_cast<long long>(g2.col) - g2.row + p.v(g2.comp);
  return x < y || (x == y && g.comp > g2.comp);
}

std::string to_string(NodeOrder o) { return o == NodeOrder::AM ? "am" : "flotw"; }

NodeOrder parse_node_order(const std::string& s) {
  if (s == "am" || s == "AM") return NodeOrder::AM;
  if (s == "flotw" || s == "FLOTW") return NodeOrder::FLOTW;
  throw InvalidArgument("unknown node order: " + s);
}

bool is_below(NodeOrder order, const Node& g, const Node& g2, const ChargeParams& p) {
  return order == NodeOrder::AM ? am_below(g, g2, p) : flotw_above(g2, g, p);
}

bool is_semisimple(const ChargeParams& p, int n) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  if (n == 0) return true;
  if (p.e() <= n) return false;
  for (int i = 0; i < p.d(); ++i)
    for (int j = 0; j < p.d(); ++j) {
      if (i == j) continue;
      for (int k = -(n - 1); k <= n - 1; ++k)
        if (residue_mod(static_cast<long long>(k) + p.v(i) - p.v(j), p.e()) == 0) return false;
    }
  return true;
}

}  // namespace ariki
