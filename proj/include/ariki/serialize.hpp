#pragma once

#include <string>

#include "json.hpp"

#include "ariki/aseq.hpp"
#include "ariki/canonical.hpp"
#include "ariki/charge.hpp"
#include "ariki/crystal.hpp"
#include "ariki/fock.hpp"
#include "ariki/laurent.hpp"
#include "ariki/partitions.hpp"

namespace ariki {

using Json = nlohmann::json;

// Text form: parts joined by '.', components by ',', "-" for an empty
// component, e.g. "2.2,2.2.1" or "-,1".
std::string format_multipartition(const Multipartition& m);
std::string format_multicomposition(const Multicomposition& m);
// Throws InvalidArgument on malformed text or, when d > 0, a wrong number of
// components.
Multipartition parse_multipartition(const std::string& text, int d = 0);
Multicomposition parse_multicomposition(const std::string& text, int d = 0);
std::vector<int> parse_int_list(const std::string& text);

Json to_json(const Multipartition& m);
Json to_json(const Multicomposition& m);
Json to_json(const ChargeParams& p);
Json to_json(const LaurentPoly& p);
Json to_json(const FockVector& v);
Json to_json(const CrystalGraph& g);
Json to_json(const AGraph& g);
Json to_json(const DecompositionMatrix& m);
Json to_json(const std::vector<CanonicalBasisElement>& basis);

Multipartition multipartition_from_json(const Json& j);
ChargeParams params_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
FockVector fock_from_json(const Json& j);
DecompositionMatrix matrix_from_json(const Json& j);

std::string format_node(const Node& n);
// "(2.2,2.2.1)" with the empty component shown as "0".
std::string format_stage(const Multipartition& m);
// Coefficient-times-label sum, e.g. "(2) + q*(1.1)".
std::string format_fock(const FockVector& v);
// One arrow per line: "(0,0) --1-opt (1,1)--> (0,1)".
std::string format_a_graph(const AGraph& g);
std::string format_matrix(const DecompositionMatrix& m);
std::string format_basis(const std::vector<CanonicalBasisElement>& basis);
std::string crystal_to_dot(const CrystalGraph& g);

}  // namespace ariki
