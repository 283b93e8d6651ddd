#include "negabound/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace negabound {

BipartiteIndex BipartiteIndex::make(Eigen::Index dim_a, Eigen::Index dim_b) {
  if (dim_a < 2 || dim_b < 2) {
    throw std::invalid_argument("BipartiteIndex: subsystem dimensions must be >= 2, got (" +
                                std::to_string(dim_a) + ", " + std::to_string(dim_b) + ")");
  }
  return BipartiteIndex{dim_a, dim_b};
}

bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex v = m(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  }
  return true;
}

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermiticity_defect: matrix must be square");
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

void check_composite(const Matrix& rho, const BipartiteIndex& idx, const char* where) {
  if (rho.rows() != rho.cols()) {
    throw std::invalid_argument(std::string(where) + ": matrix must be square");
  }
  if (rho.rows() != idx.total()) {
    throw std::invalid_argument(std::string(where) + ": matrix side " + std::to_string(rho.rows()) +
                                " does not match dim_a*dim_b = " + std::to_string(idx.total()));
  }
}

}  // namespace

Matrix partial_transpose(const Matrix& rho, const BipartiteIndex& idx) {
  check_composite(rho, idx, "partial_transpose");
  const Eigen::Index da = idx.dim_a, db = idx.dim_b;
  Matrix out(rho.rows(), rho.cols());
  for (Eigen::Index m = 0; m < da; ++m)
    for (Eigen::Index n = 0; n < da; ++n)
      for (Eigen::Index mu = 0; mu < db; ++mu)
        for (Eigen::Index nu = 0; nu < db; ++nu)
          out(m * db + mu, n * db + nu) = rho(m * db + nu, n * db + mu);
  return out;
}

Matrix partial_trace(const Matrix& rho, const BipartiteIndex& idx, Subsystem keep) {
  check_composite(rho, idx, "partial_trace");
  const Eigen::Index da = idx.dim_a, db = idx.dim_b;
  if (keep == Subsystem::A) {
    Matrix out = Matrix::Zero(da, da);
    for (Eigen::Index m = 0; m < da; ++m)
      for (Eigen::Index n = 0; n < da; ++n)
        for (Eigen::Index mu = 0; mu < db; ++mu)
          out(m, n) += rho(m * db + mu, n * db + mu);
    return out;
  }
  Matrix out = Matrix::Zero(db, db);
  for (Eigen::Index mu = 0; mu < db; ++mu)
    for (Eigen::Index nu = 0; nu < db; ++nu)
      for (Eigen::Index m = 0; m < da; ++m)
        out(mu, nu) += rho(m * db + mu, m * db + nu);
  return out;
}

EigResult hermitian_eigs(const Matrix& h) {
  if (!all_finite(h)) throw std::invalid_argument("hermitian_eigs: non-finite entries");
  const double defect = hermiticity_defect(h);
  if (defect > kHermTol) {
    throw std::invalid_argument("hermitian_eigs: matrix is not Hermitian (defect " +
                                std::to_string(defect) + " > tolerance)");
  }
  const Matrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigs: eigensolver failed to converge");
  }
  // Eigen returns ascending order; flip to descending.
  const Eigen::Index n = sym.rows();
  EigResult out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = Matrix(n, n);
  for (Eigen::Index k = 0; k < n; ++k) out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  return out;
}

double trace_norm(const Matrix& h) {
  return hermitian_eigs(h).values.cwiseAbs().sum();
}

double operator_norm(const Matrix& m) {
  if (!all_finite(m)) throw std::invalid_argument("operator_norm: non-finite entries");
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

}  // namespace negabound
