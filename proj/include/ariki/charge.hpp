#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ariki/partitions.hpp"
#include "ariki/rational.hpp"

namespace ariki {

// Parameters (d, e, v_0..v_{d-1}, s). The weights m^(j) = v_j - je/d + se are
// kept multiplied by d so every comparison stays in the integers.
class ChargeParams {
public:
  // Validates d >= 1, e >= 2, 0 <= v_0 <= ... <= v_{d-1} < e. When s is not
  // given, the smallest s >= 0 with every scaled weight nonnegative is used.
  static ChargeParams make(int d, int e, std::vector<int> v, std::optional<int> s = std::nullopt);

  int d() const { return d_; }
  int e() const { return e_; }
  int s() const { return s_; }
  std::span<const int> v() const { return v_; }
  int v(int j) const { return v_.at(static_cast<std::size_t>(j)); }
  // d * m^(j).
  std::span<const int> scaled_m() const { return scaled_m_; }
  int scaled_m(int j) const { return scaled_m_.at(static_cast<std::size_t>(j)); }
  Rational m(int j) const { return Rational(scaled_m(j), d_); }

  ChargeParams with_shift(int s) const { return make(d_, e_, v_, s); }

  bool operator==(const ChargeParams&) const = default;

private:
  int d_ = 1;
  int e_ = 2;
  int s_ = 0;
  std::vector<int> v_;
  std::vector<int> scaled_m_;
};

// Residue of a diagram cell, in [0, e).
int residue(const Node& n, const ChargeParams& p);
int residue_mod(long long x, int e);

// Literal AM relation: g below g2 iff c < c', or c = c' and a < a'.
bool am_below(const Node& g, const Node& g2, const ChargeParams& p);
// b-a+v_c < b'-a'+v_c', or equal diagonals and c > c'.
bool flotw_above(const Node& g, const Node& g2, const ChargeParams& p);

enum class NodeOrder { AM, FLOTW };

std::string to_string(NodeOrder o);
NodeOrder parse_node_order(const std::string& s);

// "g lies below g2" in the chosen order. For FLOTW this is flotw_above(g2, g).
bool is_below(NodeOrder order, const Node& g, const Node& g2, const ChargeParams& p);

// Semisimplicity at rank n for parameters u_j = eta^{v_j}, v = eta.
bool is_semisimple(const ChargeParams& p, int n);

}  // namespace ariki
