#include "negabound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace negabound {

std::string to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::FirstQubit: return "first_qubit";
    case BoundMethod::FirstImproved: return "first_improved";
    case BoundMethod::MultiBlock: return "multi_block";
    case BoundMethod::SecondMethod: return "second_method";
    case BoundMethod::SecondQubit: return "second_qubit";
    case BoundMethod::SchmidtKnown: return "schmidt_known";
  }
  throw std::logic_error("to_string(BoundMethod): unknown value");
}

BoundMethod bound_method_from_string(const std::string& name) {
  if (name == "first_qubit") return BoundMethod::FirstQubit;
  if (name == "first_improved") return BoundMethod::FirstImproved;
  if (name == "multi_block") return BoundMethod::MultiBlock;
  if (name == "second_method") return BoundMethod::SecondMethod;
  if (name == "second_qubit") return BoundMethod::SecondQubit;
  if (name == "schmidt_known") return BoundMethod::SchmidtKnown;
  throw std::invalid_argument("unknown bound method '" + name + "'");
}

ProjectorPair ProjectorPair::make(Matrix p_a, Matrix p_b) {
  for (const Matrix* p : {&p_a, &p_b}) {
    if (p->rows() != p->cols()) throw std::invalid_argument("ProjectorPair: matrices must be square");
    if (hermiticity_defect(*p) > kHermTol) {
      throw std::invalid_argument("ProjectorPair: projector is not Hermitian");
    }
    const double idem = (*p * *p - *p).cwiseAbs().maxCoeff();
    if (idem > kHermTol) {
      throw std::invalid_argument("ProjectorPair: matrix is not idempotent (defect " +
                                  std::to_string(idem) + ")");
    }
  }
  return ProjectorPair{std::move(p_a), std::move(p_b)};
}

ProjectorPair projector_from_pair(const RankOnePair& pair) {
  Matrix p_a = pair.eta0 * pair.eta0.adjoint() + pair.eta1 * pair.eta1.adjoint();
  Matrix p_b = pair.xi0 * pair.xi0.adjoint() + pair.xi1 * pair.xi1.adjoint();
  return ProjectorPair::make(std::move(p_a), std::move(p_b));
}

BoundCertificate bound_first_qubit(double kappa) {
  BoundCertificate cert;
  cert.method = BoundMethod::FirstQubit;
  cert.inputs["kappa"] = kappa;
  if (kappa <= 0.0) {
    cert.notes = "kappa <= 0: condition not violated, no bound";
    return cert;
  }
  cert.applicable = true;
  cert.lower_bound = std::max(0.0, 0.5 * (std::sqrt(1.0 + 4.0 * kappa) - 1.0));
  return cert;
}

BoundCertificate bound_first_improved(double kappa, double a) {
  if (a < -kHermTol || a > 1.0 + kHermTol) {
    throw std::invalid_argument("bound_first_improved: diagonal weight a = " + std::to_string(a) +
                                " outside [0, 1]");
  }
  a = std::clamp(a, 0.0, 1.0);
  BoundCertificate cert;
  cert.method = BoundMethod::FirstImproved;
  cert.inputs["kappa"] = kappa;
  cert.inputs["a"] = a;
  if (kappa <= 0.0) {
    cert.notes = "kappa <= 0: condition not violated, no bound";
    return cert;
  }
  cert.applicable = true;
  cert.lower_bound = std::max(0.0, 0.5 * (std::sqrt(a * a + 4.0 * kappa) - a));
  return cert;
}

std::vector<double> pinched_norms(const BipartiteState& state,
                                  const std::vector<ProjectorPair>& projectors) {
  if (projectors.empty()) throw std::invalid_argument("pinched_norms: no projectors given");
  std::vector<Matrix> lifted;
  lifted.reserve(projectors.size());
  for (const ProjectorPair& p : projectors) {
    if (p.p_a.rows() != state.idx.dim_a || p.p_b.rows() != state.idx.dim_b) {
      throw std::invalid_argument("pinched_norms: projector dimensions do not match the state");
    }
    lifted.push_back(kron(p.p_a, p.p_b));
  }
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    for (std::size_t j = i + 1; j < lifted.size(); ++j) {
      const double overlap = (lifted[i] * lifted[j]).cwiseAbs().maxCoeff();
      if (overlap > kHermTol) {
        throw std::invalid_argument("pinched_norms: projectors " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are not orthogonal (overlap " +
                                    std::to_string(overlap) + ")");
      }
    }
  }
  const Matrix pt = partial_transpose(state.rho, state.idx);
  std::vector<double> norms;
  norms.reserve(lifted.size());
  for (const Matrix& pi : lifted) norms.push_back(trace_norm(pi * pt * pi));
  return norms;
}

BoundCertificate bound_multi_block(const std::vector<double>& kappas) {
  if (kappas.empty()) throw std::invalid_argument("bound_multi_block: no kappas given");
  BoundCertificate cert;
  cert.method = BoundMethod::MultiBlock;
  double total = 0.0;
  int positive = 0;
  for (std::size_t j = 0; j < kappas.size(); ++j) {
    cert.inputs["kappa_" + std::to_string(j)] = kappas[j];
    if (kappas[j] > 0.0) {
      total += 0.5 * (std::sqrt(1.0 + 4.0 * kappas[j]) - 1.0);
      ++positive;
    }
  }
  cert.inputs["blocks"] = static_cast<double>(kappas.size());
  cert.inputs["blocks_positive"] = static_cast<double>(positive);
  if (positive == 0) {
    cert.notes = "no block has kappa > 0";
    return cert;
  }
  cert.applicable = true;
  cert.lower_bound = total;
  return cert;
}

namespace {

void check_second_method_args(double x, double y, const char* where) {
  if (x < 0.0) throw std::invalid_argument(std::string(where) + ": x must be >= 0");
  if (y <= 0.0) throw std::invalid_argument(std::string(where) + ": y must be > 0");
}

}  // namespace

BoundCertificate bound_second_method(double kappa, double x, double y) {
  check_second_method_args(x, y, "bound_second_method");
  BoundCertificate cert;
  cert.method = BoundMethod::SecondMethod;
  cert.notes = "bisection";
  cert.inputs["kappa"] = kappa;
  cert.inputs["x"] = x;
  cert.inputs["y"] = y;
  if (kappa <= 0.0) {
    cert.notes = "kappa <= 0: condition not violated, no bound";
    return cert;
  }
  const double lhs = std::sqrt(kappa + x);
  const auto rhs = [&](double mu) {
    return std::sqrt(1.0 + mu) * std::sqrt(mu * y + x) + mu * std::sqrt(y);
  };
  // rhs is strictly increasing in mu and rhs(0) = sqrt(x) < lhs for
  // kappa > 0, so the crossing is unique. Bracket, then bisect.
  double hi = 1.0;
  int guard = 0;
  while (rhs(hi) < lhs) {
    hi *= 2.0;
    if (++guard > 200) throw std::runtime_error("bound_second_method: bracketing failed");
  }
  double lo = 0.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (rhs(mid) >= lhs) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  cert.applicable = true;
  cert.lower_bound = std::max(0.0, lo);  // lower end: conservative side of the root
  return cert;
}

BoundCertificate bound_second_method_quadratic(double kappa, double x, double y) {
  check_second_method_args(x, y, "bound_second_method_quadratic");
  BoundCertificate cert;
  cert.method = BoundMethod::SecondMethod;
  cert.notes = "simplified quadratic";
  cert.inputs["kappa"] = kappa;
  cert.inputs["x"] = x;
  cert.inputs["y"] = y;
  if (x == 0.0) {
    cert.notes = "x = 0: quadratic form divides by x, use bound_second_method";
    return cert;
  }
  if (kappa <= 0.0) {
    cert.notes = "kappa <= 0: condition not violated, no bound";
    return cert;
  }
  // Rearranged as c2 mu^2 + c1 mu + c0 >= 0 with c2 > 0, c1 > 0 and c0 < 0
  // for kappa > 0, so there is exactly one positive root.
  const double sx = std::sqrt(x);
  const double c2 = y / (4.0 * sx);
  const double c1 = y / (2.0 * sx) + 0.5 * sx + std::sqrt(y);
  const double c0 = sx - std::sqrt(kappa + x);
  const double mu = (-c1 + std::sqrt(c1 * c1 - 4.0 * c2 * c0)) / (2.0 * c2);
  cert.applicable = true;
  cert.lower_bound = std::max(0.0, mu);
  return cert;
}

BoundCertificate bound_second_zero_x(double kappa, double y) {
  if (y <= 0.0) throw std::invalid_argument("bound_second_zero_x: y must be > 0");
  BoundCertificate cert;
  cert.method = BoundMethod::SecondMethod;
  cert.notes = "closed-form quadratic at x = 0";
  cert.inputs["kappa"] = kappa;
  cert.inputs["x"] = 0.0;
  cert.inputs["y"] = y;
  if (kappa <= 0.0) {
    cert.notes = "kappa <= 0: condition not violated, no bound";
    return cert;
  }
  // From sqrt(kappa/y) <= mu^2/2 + 2 mu, the smallest admissible mu.
  cert.applicable = true;
  cert.lower_bound = std::max(0.0, std::sqrt(4.0 + 2.0 * std::sqrt(kappa / y)) - 2.0);
  return cert;
}

BoundCertificate bound_second_qubit(double kappa, double alpha, bool assume_negative_branch) {
  if (alpha < -kHermTol || alpha > 1.0 + kHermTol) {
    throw std::invalid_argument("bound_second_qubit: alpha = " + std::to_string(alpha) +
                                " outside [0, 1]");
  }
  alpha = std::clamp(alpha, 0.0, 1.0);
  BoundCertificate cert;
  cert.method = BoundMethod::SecondQubit;
  cert.inputs["kappa"] = kappa;
  cert.inputs["alpha"] = alpha;
  const bool admissible = kappa > 0.0 || (assume_negative_branch && kappa >= 0.0);
  if (!admissible) {
    cert.notes = kappa <= 0.0 && !assume_negative_branch
                     ? "kappa <= 0: condition not violated, no bound"
                     : "kappa < 0";
    return cert;
  }
  if (kappa == 0.0) cert.notes = "kappa = 0 admitted by assume_negative_branch";
  cert.applicable = true;
  const double s = 1.0 + alpha;
  cert.lower_bound = std::max(0.0, 0.5 * (std::sqrt(s * s + 4.0 * kappa) - 1.0 + alpha));
  return cert;
}

BoundCertificate bound_schmidt_known(Complex mean_AdB) {
  BoundCertificate cert;
  cert.method = BoundMethod::SchmidtKnown;
  const double m = std::abs(mean_AdB);
  cert.inputs["abs_mean_AdB"] = m;
  if (m <= 0.25) {
    cert.notes = "|<A^dag B>| <= 1/4: no bound";
    return cert;
  }
  cert.applicable = true;
  cert.lower_bound = std::max(0.0, 0.5 * (4.0 * m - 1.0));
  return cert;
}

BoundCertificate bound_schmidt_known(const BipartiteState& state, const LocalOperator& a,
                                     const LocalOperator& b) {
  const Complex mean_AdB =
      expectation(state, LocalOperator{Subsystem::A, a.matrix.adjoint()}, b);
  const Complex cross =
      expectation(state, LocalOperator{Subsystem::A, a.matrix.adjoint() * a.matrix},
                  LocalOperator{Subsystem::B, b.matrix.adjoint() * b.matrix});
  if (std::abs(cross) > 1e-10) {
    throw std::invalid_argument(
        "bound_schmidt_known: <A^dag A B^dag B> = " + std::to_string(std::abs(cross)) +
        " but the partition construction requires it to vanish");
  }
  BoundCertificate cert = bound_schmidt_known(mean_AdB);
  cert.inputs["mean_AdABdB"] = std::abs(cross);
  return cert;
}

std::pair<LocalOperator, LocalOperator> schmidt_partition_operators(const SchmidtData& sd, int k) {
  const int n = static_cast<int>(sd.coefficients.size());
  if (n < 2) throw std::invalid_argument("schmidt_partition_operators: need at least 2 Schmidt terms");
  if (k < 1 || k > n - 1) {
    throw std::invalid_argument("schmidt_partition_operators: k must lie in [1, " +
                                std::to_string(n - 1) + "], got " + std::to_string(k));
  }
  Vector alpha = Vector::Zero(sd.idx.dim_a);        // sum of the first k a-vectors
  Vector alpha_tilde = Vector::Zero(sd.idx.dim_a);  // sum of the rest
  Vector beta = Vector::Zero(sd.idx.dim_b);
  Vector beta_tilde = Vector::Zero(sd.idx.dim_b);
  for (int j = 0; j < n; ++j) {
    if (j < k) {
      alpha += sd.basis_a[static_cast<std::size_t>(j)];
      beta += sd.basis_b[static_cast<std::size_t>(j)];
    } else {
      alpha_tilde += sd.basis_a[static_cast<std::size_t>(j)];
      beta_tilde += sd.basis_b[static_cast<std::size_t>(j)];
    }
  }
  return {LocalOperator{Subsystem::A, alpha * alpha_tilde.adjoint()},
          LocalOperator{Subsystem::B, beta_tilde * beta.adjoint()}};
}

void check_certificate_against_dims(const BoundCertificate& cert, const BipartiteIndex& idx) {
  const double max_neg = 0.5 * (static_cast<double>(idx.min_dim()) - 1.0);
  if (cert.lower_bound > max_neg + 1e-9) {
    throw std::logic_error("bound " + std::to_string(cert.lower_bound) +
                           " exceeds the theoretical maximum " + std::to_string(max_neg) +
                           " for dims (" + std::to_string(idx.dim_a) + ", " +
                           std::to_string(idx.dim_b) + ")");
  }
}

}  // namespace negabound
