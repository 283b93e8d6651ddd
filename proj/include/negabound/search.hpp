#pragma once

#include <cstdint>

#include "negabound/bounds.hpp"

namespace negabound {

/// Derivative-free pattern-search configuration.
struct SearchConfig {
  BoundMethod method = BoundMethod::FirstQubit;
  int restarts = 16;
  int max_iters = 400;       // coordinate sweeps per restart
  double step_init = 0.5;
  double step_min = 1e-6;
  std::uint64_t seed = 0;
};

struct SearchResult {
  RankOnePair best_pair;
  KappaReport best_report;
  BoundCertificate best_certificate;
  std::vector<double> restart_best;  // best objective value per restart
};

/// Number of unconstrained reals parameterizing a rank-one pair for these
/// dimensions: (4 d_a - 4) + (4 d_b - 4).
int pair_parameter_count(const BipartiteIndex& idx);

/// Maps unconstrained reals to a RankOnePair through chained Givens
/// rotations with phases. The zero vector yields the canonical basis pair
/// (e0, e1) on both sides; the map reaches every orthonormal pair.
RankOnePair parameterize_pair(const BipartiteIndex& idx, const RealParams& params);

/// Certificate for one pair under the given method. Supported methods:
/// first_qubit, first_improved, multi_block (single block), second_method
/// (bisection), second_qubit.
BoundCertificate evaluate_bound(const BipartiteState& state, const RankOnePair& pair,
                                BoundMethod method);

/// KappaReport the method consumes (first or second condition).
KappaReport evaluate_report(const BipartiteState& state, const RankOnePair& pair,
                            BoundMethod method);

/// Search objective: the certificate bound when applicable, otherwise kappa
/// itself (negative), which keeps the landscape informative where the
/// condition fails.
double bound_objective(const BipartiteState& state, const RankOnePair& pair, BoundMethod method);

/// Pattern search over pair parameters: restart 0 starts at the canonical
/// basis pair, the rest at seeded random parameters; each restart sweeps
/// +/- step per coordinate, halving the step when a sweep yields no
/// improvement. Deterministic for a fixed seed; the best value over restarts
/// is nondecreasing in the number of restarts for a fixed seed.
SearchResult optimize(const BipartiteState& state, const SearchConfig& config);

struct PairComparisonRow {
  std::string name;
  KappaReport report;
  BoundCertificate certificate;
};

/// Evaluates named pairs under one method and sorts by bound descending
/// (ties keep input order).
std::vector<PairComparisonRow> compare_pairs(
    const BipartiteState& state, const std::vector<std::pair<std::string, RankOnePair>>& pairs,
    BoundMethod method);

}  // namespace negabound
