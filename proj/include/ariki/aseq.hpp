#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ariki/charge.hpp"
#include "ariki/partitions.hpp"

namespace ariki {

// Residues from first added to last added.
struct ASequence {
  std::vector<int> residues;

  // Maximal runs (residue, length); consecutive residues differ.
  std::vector<std::pair<int, int>> blocks() const;
  // "1,0,0,3"
  std::string str() const;
};

// Which qualifying residue the peeling step takes when several do.
enum class ResidueChoice { Smallest, Largest };

// Residues k that qualify for the first peeling step of lambda.
std::vector<int> peelable_residues(const Multipartition& lambda, const ChargeParams& p);

// Throws DomainError unless lambda is FLOTW.
ASequence a_sequence(const Multipartition& lambda, const ChargeParams& p,
                     ResidueChoice choice = ResidueChoice::Smallest);

// Adds a k-node at the row extension maximizing d(lambda_j - j) + d m^(c),
// ties broken by the smallest (component, row). Every row of the
// composition, plus row height+1 of each component, is a candidate.
std::pair<Multicomposition, Node> k_opt_add(const Multicomposition& m, int k, const ChargeParams& p);

struct AGraphStep {
  Multipartition before;
  Node node;
  int residue = 0;
  Multipartition after;
};

struct AGraph {
  Multipartition start;
  std::vector<AGraphStep> steps;
  Multipartition final_stage() const;
};

AGraph a_graph(const Multipartition& lambda, const ChargeParams& p);

// Every endpoint of a chain of single-node additions from empty whose
// residues follow `residues`. The multipartition variant only visits
// multipartitions; the composition variant allows any row extension.
std::vector<Multipartition> realizations(const std::vector<int>& residues, const ChargeParams& p);
std::vector<Multicomposition> composition_realizations(const std::vector<int>& residues, const ChargeParams& p);

}  // namespace ariki
