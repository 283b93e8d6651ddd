#include "negabound/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace negabound {

namespace {

/// Complex standard-normal sampler on top of mt19937_64 via Box-Muller, so
/// that streams are fully specified by the seed (no library-defined
/// distributions involved).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  // Uniform in (0, 1].
  double uniform_pos() { return 1.0 - (rng_() >> 11) * 0x1.0p-53; }
  // Uniform in [0, 1).
  double uniform() { return (rng_() >> 11) * 0x1.0p-53; }

  /// Re + i*Im with independent N(0,1) components.
  Complex complex_normal() {
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double phi = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

BipartiteState BipartiteState::make(const BipartiteIndex& idx, Matrix rho) {
  if (idx.dim_a < 2 || idx.dim_b < 2) throw std::invalid_argument("BipartiteState: dims must be >= 2");
  if (rho.rows() != rho.cols() || rho.rows() != idx.total()) {
    throw std::invalid_argument("BipartiteState: matrix side " + std::to_string(rho.rows()) +
                                " does not match dim_a*dim_b = " + std::to_string(idx.total()));
  }
  if (!all_finite(rho)) throw std::invalid_argument("BipartiteState: non-finite entries");
  const double defect = hermiticity_defect(rho);
  if (defect > kHermTol) {
    throw std::invalid_argument("BipartiteState: not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const double tr_err = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (tr_err > kHermTol) {
    throw std::invalid_argument("BipartiteState: trace deviates from 1 by " + std::to_string(tr_err));
  }
  const EigResult eig = hermitian_eigs(rho);
  const double min_eig = eig.values(eig.values.size() - 1);
  if (min_eig < -kEigTol) {
    throw std::invalid_argument("BipartiteState: negative eigenvalue " + std::to_string(min_eig) +
                                " below PSD slack");
  }
  return BipartiteState{idx, std::move(rho)};
}

PureState PureState::make(const BipartiteIndex& idx, Vector amplitudes) {
  if (idx.dim_a < 2 || idx.dim_b < 2) throw std::invalid_argument("PureState: dims must be >= 2");
  if (amplitudes.size() != idx.total()) {
    throw std::invalid_argument("PureState: amplitude length " + std::to_string(amplitudes.size()) +
                                " does not match dim_a*dim_b = " + std::to_string(idx.total()));
  }
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    const Complex v = amplitudes(i);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("PureState: non-finite amplitude");
    }
  }
  const double norm_err = std::abs(amplitudes.norm() - 1.0);
  if (norm_err > kUnitTol) {
    throw std::invalid_argument("PureState: norm deviates from 1 by " + std::to_string(norm_err));
  }
  return PureState{idx, std::move(amplitudes)};
}

BipartiteState PureState::density() const {
  Matrix rho = amplitudes * amplitudes.adjoint();
  // Exact by construction; renormalize the trace to absorb rounding.
  rho /= rho.trace().real();
  return BipartiteState{idx, std::move(rho)};
}

Vector SchmidtData::reconstruct() const {
  Vector out = Vector::Zero(idx.total());
  for (Eigen::Index k = 0; k < coefficients.size(); ++k) {
    for (Eigen::Index m = 0; m < idx.dim_a; ++m)
      for (Eigen::Index mu = 0; mu < idx.dim_b; ++mu)
        out(m * idx.dim_b + mu) += coefficients(k) * basis_a[k](m) * basis_b[k](mu);
  }
  return out;
}

double negativity_exact(const BipartiteState& state) {
  const double tn = trace_norm(partial_transpose(state.rho, state.idx));
  return std::max(0.0, 0.5 * (tn - 1.0));
}

double negativity_exact(const PureState& state) { return negativity_exact(state.density()); }

namespace {

/// Lexicographic order on complex vectors by (real, imag) per component,
/// used only to break exact coefficient ties deterministically.
bool lex_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

}  // namespace

SchmidtData schmidt(const PureState& state) {
  const Eigen::Index da = state.idx.dim_a, db = state.idx.dim_b;
  Matrix m(da, db);
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < db; ++j) m(i, j) = state.amplitudes(i * db + j);

  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::Index r = svd.singularValues().size();

  SchmidtData sd;
  sd.idx = state.idx;
  sd.coefficients = svd.singularValues();
  sd.basis_a.resize(r);
  sd.basis_b.resize(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    Vector u = svd.matrixU().col(k);
    // amplitudes(m,mu) = sum_k s_k U(m,k) conj(V(mu,k)), so the b-side
    // Schmidt vector is the conjugated V column.
    Vector v = svd.matrixV().col(k).conjugate();
    // Phase-fix: rotate u so its largest-magnitude component is real
    // positive, compensating on v to keep u (x) v unchanged.
    Eigen::Index imax = 0;
    u.cwiseAbs().maxCoeff(&imax);
    const Complex pivot = u(imax);
    if (std::abs(pivot) > 0) {
      const Complex phase = pivot / std::abs(pivot);
      u *= std::conj(phase);
      v *= phase;
    }
    sd.basis_a[k] = std::move(u);
    sd.basis_b[k] = std::move(v);
  }

  // Singular values arrive descending; order exact ties lexicographically by
  // the a-side vector so degenerate spectra still serialize reproducibly.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(r));
  for (Eigen::Index k = 0; k < r; ++k) order[static_cast<std::size_t>(k)] = k;
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    if (sd.coefficients(x) != sd.coefficients(y)) return sd.coefficients(x) > sd.coefficients(y);
    return lex_less(sd.basis_a[static_cast<std::size_t>(x)], sd.basis_a[static_cast<std::size_t>(y)]);
  });
  SchmidtData out;
  out.idx = sd.idx;
  out.coefficients = RealVector(r);
  out.basis_a.resize(static_cast<std::size_t>(r));
  out.basis_b.resize(static_cast<std::size_t>(r));
  for (Eigen::Index k = 0; k < r; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.coefficients(k) = sd.coefficients(src);
    out.basis_a[static_cast<std::size_t>(k)] = sd.basis_a[static_cast<std::size_t>(src)];
    out.basis_b[static_cast<std::size_t>(k)] = sd.basis_b[static_cast<std::size_t>(src)];
  }
  return out;
}

double negativity_pure(const SchmidtData& sd) {
  const double s = sd.coefficients.sum();
  return std::max(0.0, 0.5 * (s * s - 1.0));
}

PureState make_bell_like(double lambda0) {
  if (lambda0 < 0.0 || lambda0 > 1.0) {
    throw std::invalid_argument("make_bell_like: lambda0 must lie in [0, 1]");
  }
  Vector amp = Vector::Zero(4);
  amp(1) = std::sqrt(lambda0);        // |01>
  amp(2) = std::sqrt(1.0 - lambda0);  // |10>
  return PureState::make(BipartiteIndex{2, 2}, std::move(amp));
}

BipartiteState make_noisy(double lambda0, double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("make_noisy: p must lie in [0, 1]");
  const BipartiteState pure = make_bell_like(lambda0).density();
  Matrix rho = p * pure.rho + (1.0 - p) * 0.25 * Matrix::Identity(4, 4);
  return BipartiteState::make(pure.idx, std::move(rho));
}

PureState make_four_qubit(const std::array<double, 4>& lambdas) {
  double sum = 0.0;
  for (double l : lambdas) {
    if (l < 0.0) throw std::invalid_argument("make_four_qubit: weights must be nonnegative");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("make_four_qubit: weights sum to " + std::to_string(sum) +
                                ", expected 1");
  }
  // Each side holds two qubits; the state is maximally correlated in the
  // two-qubit basis: sum_m sqrt(lambda_m) |m>_a |m>_b with m = 2j + k.
  Vector amp = Vector::Zero(16);
  for (int m = 0; m < 4; ++m) amp(m * 4 + m) = std::sqrt(lambdas[static_cast<std::size_t>(m)]);
  amp /= amp.norm();
  return PureState::make(BipartiteIndex{4, 4}, std::move(amp));
}

PureState make_max_entangled(int n) {
  if (n < 2) throw std::invalid_argument("make_max_entangled: n must be >= 2");
  Vector amp = Vector::Zero(static_cast<Eigen::Index>(n) * n);
  const double c = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) amp(static_cast<Eigen::Index>(j) * n + j) = c;
  return PureState::make(BipartiteIndex{n, n}, std::move(amp));
}

PureState random_pure(const BipartiteIndex& idx, std::uint64_t seed) {
  GaussianStream gs(seed);
  Vector amp(idx.total());
  for (Eigen::Index i = 0; i < amp.size(); ++i) amp(i) = gs.complex_normal();
  amp /= amp.norm();
  return PureState::make(idx, std::move(amp));
}

Matrix random_density_matrix(int dim, int rank, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("random_density_matrix: dim must be >= 1");
  if (rank < 1 || rank > dim) {
    throw std::invalid_argument("random_density_matrix: rank must lie in [1, dim]");
  }
  GaussianStream gs(seed);
  Matrix g(dim, rank);
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < g.rows(); ++i) g(i, j) = gs.complex_normal();
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return rho;
}

BipartiteState random_mixed(const BipartiteIndex& idx, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > idx.total()) {
    throw std::invalid_argument("random_mixed: rank must lie in [1, dim_a*dim_b]");
  }
  return BipartiteState::make(idx, random_density_matrix(static_cast<int>(idx.total()), rank, seed));
}

}  // namespace negabound
