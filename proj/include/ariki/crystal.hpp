#pragma once

#include <optional>
#include <vector>

#include "ariki/charge.hpp"
#include "ariki/partitions.hpp"

namespace ariki {

struct SignatureEntry {
  Node node;
  bool addable = false;
};

// Addable and removable i-nodes sorted from lowest to highest in the order.
struct Signature {
  int residue = 0;
  std::vector<SignatureEntry> entries;
};

Signature signature(const Multipartition& lambda, int i, NodeOrder order, const ChargeParams& p);

// Scanning the signature upward, each removable node cancels the nearest
// uncancelled addable node below it. The good addable node is the lowest
// surviving addable node; the good removable node is the highest surviving
// removable node.
std::optional<Node> good_addable_node(const Multipartition& lambda, int i, NodeOrder order, const ChargeParams& p);
std::optional<Node> good_removable_node(const Multipartition& lambda, int i, NodeOrder order, const ChargeParams& p);

// Membership in the crystal generated from the empty multipartition.
bool in_crystal(const Multipartition& lambda, NodeOrder order, const ChargeParams& p);
bool is_kleshchev(const Multipartition& lambda, const ChargeParams& p);
// Direct check of the two FLOTW conditions.
bool is_flotw(const Multipartition& lambda, const ChargeParams& p);

struct CrystalEdge {
  Multipartition from;
  Multipartition to;
  int residue = 0;
  Node node;
};

struct CrystalGraph {
  NodeOrder order = NodeOrder::FLOTW;
  // levels[r] holds the rank-r vertices in canonical order.
  std::vector<std::vector<Multipartition>> levels;
  // Sorted by (from, residue) with from in canonical order.
  std::vector<CrystalEdge> edges;
};

CrystalGraph crystal_graph(const ChargeParams& p, int n, NodeOrder order);

// Residues of the good removable nodes stripped from lambda down to the
// empty multipartition, reported in the order they would be added.
std::vector<int> crystal_path(const Multipartition& lambda, NodeOrder order, const ChargeParams& p);
// Adds good nodes of the given residues one by one starting from empty.
Multipartition replay_path(const std::vector<int>& residues, int d, NodeOrder order, const ChargeParams& p);

// Kleshchev -> FLOTW and back along matching crystal paths.
Multipartition bijection_j(const Multipartition& mu, const ChargeParams& p);
Multipartition bijection_j_inverse(const Multipartition& nu, const ChargeParams& p);

}  // namespace ariki
