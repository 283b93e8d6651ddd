#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "negabound/linalg.hpp"

namespace negabound {

/// Name of the seeded RNG scheme used by the random ensembles; recorded in
/// reports so random inputs are reproducible.
inline constexpr char kGeneratorName[] = "mt19937_64-boxmuller";

/// A bipartite density matrix. `make` validates Hermiticity (kHermTol),
/// unit trace (kHermTol) and positive semidefiniteness (slack -kEigTol).
struct BipartiteState {
  BipartiteIndex idx;
  Matrix rho;

  static BipartiteState make(const BipartiteIndex& idx, Matrix rho);
};

/// A bipartite pure state given by its amplitude vector in the composite
/// basis (row m * dim_b + mu). `make` validates unit norm within kUnitTol.
struct PureState {
  BipartiteIndex idx;
  Vector amplitudes;

  static PureState make(const BipartiteIndex& idx, Vector amplitudes);
  BipartiteState density() const;
};

/// Schmidt decomposition: coefficients are the singular values sqrt(lambda_j)
/// in descending order; basis_a/basis_b hold the paired orthonormal vectors.
struct SchmidtData {
  BipartiteIndex idx;
  RealVector coefficients;
  std::vector<Vector> basis_a;
  std::vector<Vector> basis_b;

  /// Rebuilds the amplitude vector sum_j c_j u_j (x) v_j (test helper).
  Vector reconstruct() const;
};

/// Exact negativity (||rho^Tb||_1 - 1) / 2 via eigendecomposition of the
/// partial transpose. Clamped at 0.
double negativity_exact(const BipartiteState& state);
double negativity_exact(const PureState& state);

/// Schmidt decomposition of a pure state via SVD of the reshaped amplitude
/// matrix. Deterministic: coefficients descending; each basis_a vector is
/// phase-fixed so its largest-magnitude component is real positive; exact
/// ties are ordered lexicographically by basis_a components.
SchmidtData schmidt(const PureState& state);

/// Pure-state negativity ((sum_j sqrt(lambda_j))^2 - 1) / 2.
double negativity_pure(const SchmidtData& sd);

/// sqrt(lambda0)|01> + sqrt(1-lambda0)|10> on a qubit pair.
PureState make_bell_like(double lambda0);

/// p |psi><psi| + (1-p) I/4 with |psi> = make_bell_like(lambda0).
BipartiteState make_noisy(double lambda0, double p);

/// Four-qubit family sum_{j,k} sqrt(lambda_jk) |jk>_a |jk>_b with each side
/// holding two qubits; lambdas ordered [l00, l01, l10, l11], must sum to 1.
PureState make_four_qubit(const std::array<double, 4>& lambdas);

/// sum_j |jj> / sqrt(n) on an (n, n) system.
PureState make_max_entangled(int n);

/// Haar-random pure state (normalized complex Gaussian vector).
PureState random_pure(const BipartiteIndex& idx, std::uint64_t seed);

/// Ginibre-ensemble density matrix G G^dag / tr with G of shape (dim, rank).
/// Building block for random states on a single subsystem (e.g. products).
Matrix random_density_matrix(int dim, int rank, std::uint64_t seed);

/// Ginibre-ensemble mixed state G G^dag / tr with G of shape (total, rank).
BipartiteState random_mixed(const BipartiteIndex& idx, int rank, std::uint64_t seed);

}  // namespace negabound
