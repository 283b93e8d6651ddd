#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "negabound/bounds.hpp"
#include "negabound/search.hpp"

namespace negabound {

using Json = nlohmann::json;

// --- certificates and reports ------------------------------------------------

Json certificate_to_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const Json& j);
Json kappa_report_to_json(const KappaReport& report);

// --- state specifications ----------------------------------------------------

/// A state resolved from its JSON description. `pure` is set for the kinds
/// that define a pure state. `provenance` echoes the spec plus RNG details
/// for random kinds.
struct ResolvedState {
  BipartiteState state;
  std::optional<PureState> pure;
  Json provenance;
};

/// Supported kinds:
///   {"kind":"bell_like","lambda0":0.5}
///   {"kind":"noisy","lambda0":0.5,"p":0.667}
///   {"kind":"four_qubit","lambdas":[l00,l01,l10,l11]}
///   {"kind":"max_entangled","n":4}
///   {"kind":"raw","dims":[da,db],"re":[[..]],"im":[[..]]}   (im optional)
///   {"kind":"random_pure","dims":[da,db],"seed":1}
///   {"kind":"random_mixed","dims":[da,db],"rank":4,"seed":1}
ResolvedState resolve_state_spec(const Json& spec);

// --- operator specifications ---------------------------------------------------

struct OperatorChoice {
  std::string name;
  LocalOperator a, b;
  std::optional<RankOnePair> pair;  // set when the choice is a rank-one pair
};

struct OperatorResolution {
  std::vector<OperatorChoice> choices;
  bool block_list = false;  // true when the spec names a family of orthogonal blocks
};

/// Supported kinds:
///   {"kind":"pauli_lowering"}            A = B = |0><1|            (qubits)
///   {"kind":"pauli_raising"}             A = B = |1><0|            (qubits)
///   {"kind":"x_basis"}                   A = |+x><-x|, B = |-x><+x| (qubits)
///   {"kind":"four_qubit_coarse"}         first-qubit pair on (4,4)
///   {"kind":"four_qubit_fine1"}          rank-one pair, block {|00>,|10>}
///   {"kind":"four_qubit_fine2"}          rank-one pair, block {|01>,|11>}
///   {"kind":"four_qubit_fine_blocks"}    both fine pairs as a block list
///   {"kind":"rank_one","eta0":{"re":[..],"im":[..]},"eta1":..,"xi0":..,"xi1":..}
///   {"kind":"general","a":{"re":[[..]],"im":[[..]]},"b":{..}}
///   {"kind":"block_list","pairs":[<rank_one or named pair specs>]}
OperatorResolution resolve_operator_spec(const Json& spec, const BipartiteIndex& idx);

// --- numeric formatting --------------------------------------------------------

/// Fixed CSV/report float format: 12 significant digits, '.' decimal point.
std::string format_sig12(double v);

}  // namespace negabound
