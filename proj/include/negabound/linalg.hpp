#pragma once

#include <complex>
#include <Eigen/Dense>

namespace negabound {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealParams = Eigen::VectorXd;

// Shared numeric tolerances (double precision, matrix dims <= a few hundred).
inline constexpr double kHermTol = 1e-9;  // allowed deviation from Hermiticity
inline constexpr double kEigTol = 1e-9;   // eigenvalue residuals / PSD slack
inline constexpr double kUnitTol = 1e-10; // state-vector normalization

enum class Subsystem { A, B };

/// Dimensions of a bipartite system. The composite basis is ordered so that
/// the product vector |m>_a |mu>_b sits at row m * dim_b + mu.
struct BipartiteIndex {
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 0;

  Eigen::Index total() const { return dim_a * dim_b; }
  Eigen::Index min_dim() const { return dim_a < dim_b ? dim_a : dim_b; }
  bool operator==(const BipartiteIndex&) const = default;

  /// Validates dim_a, dim_b >= 2 and throws std::invalid_argument otherwise.
  static BipartiteIndex make(Eigen::Index dim_a, Eigen::Index dim_b);
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
struct EigResult {
  RealVector values;
  Matrix vectors;  // column k pairs with values[k]
};

/// True when every entry of m is finite.
bool all_finite(const Matrix& m);

/// max_ij |m_ij - conj(m_ji)|, i.e. the distance from Hermiticity.
double hermiticity_defect(const Matrix& m);

/// Kronecker product a (x) b in the row-major composite index convention.
Matrix kron(const Matrix& a, const Matrix& b);

/// Partial transpose on subsystem b: out[(m,mu),(n,nu)] = rho[(m,nu),(n,mu)].
Matrix partial_transpose(const Matrix& rho, const BipartiteIndex& idx);

/// Trace out the complement of `keep`.
Matrix partial_trace(const Matrix& rho, const BipartiteIndex& idx, Subsystem keep);

/// Eigendecomposition of a Hermitian matrix (checked within kHermTol,
/// symmetrized before solving). Eigenvalues descending.
EigResult hermitian_eigs(const Matrix& h);

/// Trace norm (sum of |eigenvalue|) of a Hermitian matrix.
double trace_norm(const Matrix& h);

/// Largest singular value.
double operator_norm(const Matrix& m);

}  // namespace negabound
