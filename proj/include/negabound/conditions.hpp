#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negabound/states.hpp"

namespace negabound {

enum class Condition { First, Second };

std::string to_string(Condition c);

/// An operator acting on one subsystem only.
struct LocalOperator {
  Subsystem side;
  Matrix matrix;
};

/// Two orthonormal vectors per side defining the rank-one operators
/// A = |eta0><eta1| on subsystem a and B = |xi0><xi1| on subsystem b.
struct RankOnePair {
  Vector eta0, eta1, xi0, xi1;

  /// Validates unit norms and orthogonality. Deviations below 1e-6 are
  /// repaired by Gram-Schmidt; anything larger is rejected.
  static RankOnePair make(Vector eta0, Vector eta1, Vector xi0, Vector xi1);
};

/// Evaluation record for one of the two entanglement conditions. kappa > 0
/// certifies entanglement:
///   first:  kappa = |<A^dag B>|^2 - <A^dag A B^dag B>
///   second: kappa = |<AB>|^2 - <A^dag A><B^dag B>
struct KappaReport {
  Condition condition = Condition::First;
  double kappa = 0.0;
  Complex mean_op;           // <A^dag B> (first) or <AB> (second)
  double mean_AdABdB = 0.0;  // first condition only
  double mean_AdA = 0.0;     // second condition only
  double mean_BdB = 0.0;     // second condition only
  std::optional<double> alpha;   // second condition, rank-one pairs
  std::optional<double> a_diag;  // first condition, rank-one pairs

  /// kappa must equal the recombined mean values within tol.
  bool consistent(double tol = 1e-10) const;
};

/// Tr(rho (A (x) B)); the two operators must address different subsystems.
Complex expectation(const BipartiteState& state, const LocalOperator& op_a,
                    const LocalOperator& op_b);

/// The rank-one operators A = |eta0><eta1|, B = |xi0><xi1| of a pair.
std::pair<LocalOperator, LocalOperator> rank_one(const RankOnePair& pair);

KappaReport kappa_first(const BipartiteState& state, const LocalOperator& a,
                        const LocalOperator& b);
/// Rank-one version; also fills a_diag = <P_eta0 (x) P_xi0> + <P_eta1 (x) P_xi1>,
/// the diagonal weight used by the improved first-condition bound.
KappaReport kappa_first(const BipartiteState& state, const RankOnePair& pair);

KappaReport kappa_second(const BipartiteState& state, const LocalOperator& a,
                         const LocalOperator& b);
/// Rank-one version; also fills alpha = <eta1 xi1| rho |eta1 xi1>, the
/// diagonal element entering the qubit-tailored second-condition bound.
KappaReport kappa_second(const BipartiteState& state, const RankOnePair& pair);

struct NamedOperatorPair {
  std::string name;
  LocalOperator a, b;
  std::optional<RankOnePair> pair;  // present when the pair is rank-one
};

/// The three operator choices for the maximally-correlated four-qubit family:
/// a coarse single-qubit pair (rank two) and two fine rank-one pairs living
/// in orthogonal blocks.
std::vector<NamedOperatorPair> four_qubit_operator_sets();

/// Canonical qubit pairs. sigma_minus: A = B = |0><1| (lowering on both
/// sides); sigma_plus: A = B = |1><0|; x_basis: A = |+x><-x|, B = |-x><+x|.
RankOnePair sigma_minus_pair();
RankOnePair sigma_plus_pair();
RankOnePair x_basis_pair();

}  // namespace negabound
