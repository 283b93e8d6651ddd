#pragma once

#include <map>
#include <string>
#include <vector>

#include "negabound/conditions.hpp"

namespace negabound {

enum class BoundMethod {
  FirstQubit,
  FirstImproved,
  MultiBlock,
  SecondMethod,
  SecondQubit,
  SchmidtKnown,
};

std::string to_string(BoundMethod m);
BoundMethod bound_method_from_string(const std::string& name);

/// A negativity lower bound together with the inputs that produced it.
/// lower_bound is clamped at 0; applicable = false means the method's
/// hypothesis failed (e.g. kappa <= 0) and the bound degenerates to 0.
struct BoundCertificate {
  BoundMethod method = BoundMethod::FirstQubit;
  double lower_bound = 0.0;
  bool applicable = false;
  std::map<std::string, double> inputs;
  std::string notes;

  bool operator==(const BoundCertificate&) const = default;
};

/// Local projectors lifted to P_a (x) P_b. `make` validates idempotence and
/// Hermiticity within kHermTol.
struct ProjectorPair {
  Matrix p_a, p_b;

  static ProjectorPair make(Matrix p_a, Matrix p_b);
};

/// Projectors onto the two-dimensional supports of a rank-one pair.
ProjectorPair projector_from_pair(const RankOnePair& pair);

/// N >= (sqrt(1 + 4 kappa) - 1) / 2 from the first condition restricted to
/// an effective qubit pair.
BoundCertificate bound_first_qubit(double kappa);

/// Improved variant N >= (sqrt(a^2 + 4 kappa) - a) / 2 where a is the
/// diagonal weight of the two untouched levels (a in [0, 1]).
BoundCertificate bound_first_improved(double kappa, double a);

/// Trace norms of the blocks Pi_i rho^Tb Pi_i for pairwise-orthogonal lifted
/// projectors; their sum never exceeds the full trace norm.
std::vector<double> pinched_norms(const BipartiteState& state,
                                  const std::vector<ProjectorPair>& projectors);

/// Additive multi-block bound: sum over blocks of the first-condition qubit
/// bound, with non-positive kappas contributing zero.
BoundCertificate bound_multi_block(const std::vector<double>& kappas);

/// Second negativity-bound route: smallest mu >= 0 satisfying
///   sqrt(kappa + x) <= sqrt(1 + mu) * sqrt(mu y + x) + mu sqrt(y),
/// solved by bisection (x = <A^dag A B^dag B>, y = ||A^dag A|| ||B^dag B||).
BoundCertificate bound_second_method(double kappa, double x, double y);

/// Simplified quadratic weakening of the same inequality (requires x > 0):
///   sqrt(kappa + x) <= (1 + mu/2) sqrt(x) (1 + y mu / 2x) + mu sqrt(y).
/// Not applicable at x = 0; negative x is an error.
BoundCertificate bound_second_method_quadratic(double kappa, double x, double y);

/// Closed-form quadratic specialization for x = 0:
///   mu = sqrt(4 + 2 sqrt(kappa / y)) - 2.
/// Reproduces the published worked example; it rests on a weakening step
/// that is not implied by the bisection inequality, so it is reported for
/// comparison rather than fed into the soundness-audited paths.
BoundCertificate bound_second_zero_x(double kappa, double y);

/// Qubit-tailored second-condition bound
///   N >= (sqrt((1 + alpha)^2 + 4 kappa) - 1 + alpha) / 2
/// with alpha the diagonal weight of the doubly-annihilated level. Requires
/// kappa > 0 unless assume_negative_branch permits kappa = 0.
BoundCertificate bound_second_qubit(double kappa, double alpha,
                                    bool assume_negative_branch = false);

/// Schmidt-knowledge bound N >= (4 |<A^dag B>| - 1) / 2, applicable when
/// |<A^dag B>| > 1/4.
BoundCertificate bound_schmidt_known(Complex mean_AdB);

/// Evaluated variant: computes <A^dag B> from the state and checks that
/// <A^dag A B^dag B> vanishes (within 1e-10) as the construction requires.
BoundCertificate bound_schmidt_known(const BipartiteState& state, const LocalOperator& a,
                                     const LocalOperator& b);

/// Partition operators A = |alpha><alpha~|, B = |beta~><beta| built from
/// unnormalized sums of the first k / remaining Schmidt vectors.
std::pair<LocalOperator, LocalOperator> schmidt_partition_operators(const SchmidtData& sd, int k);

/// Internal sanity check: a bound exceeding the theoretical maximum
/// (min_dim - 1) / 2 for the declared dimensions indicates a logic error.
void check_certificate_against_dims(const BoundCertificate& cert, const BipartiteIndex& idx);

}  // namespace negabound
