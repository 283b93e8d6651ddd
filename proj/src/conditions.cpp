#include "negabound/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace negabound {

std::string to_string(Condition c) { return c == Condition::First ? "first" : "second"; }

namespace {

double pair_deviation(const Vector& v0, const Vector& v1) {
  double d = std::max(std::abs(v0.norm() - 1.0), std::abs(v1.norm() - 1.0));
  return std::max(d, std::abs(v0.dot(v1)));
}

void gram_schmidt(Vector& v0, Vector& v1) {
  v0 /= v0.norm();
  v1 -= v0.dot(v1) * v0;
  const double n1 = v1.norm();
  if (n1 < 1e-12) throw std::invalid_argument("RankOnePair: vectors are linearly dependent");
  v1 /= n1;
}

}  // namespace

RankOnePair RankOnePair::make(Vector eta0, Vector eta1, Vector xi0, Vector xi1) {
  if (eta0.size() != eta1.size() || xi0.size() != xi1.size()) {
    throw std::invalid_argument("RankOnePair: per-side vector lengths differ");
  }
  if (eta0.size() < 2 || xi0.size() < 2) {
    throw std::invalid_argument("RankOnePair: vectors must live in dimension >= 2");
  }
  const double dev_a = pair_deviation(eta0, eta1);
  const double dev_b = pair_deviation(xi0, xi1);
  if (dev_a > 1e-6 || dev_b > 1e-6) {
    throw std::invalid_argument("RankOnePair: orthonormality deviation " +
                                std::to_string(std::max(dev_a, dev_b)) +
                                " exceeds repair threshold 1e-6");
  }
  gram_schmidt(eta0, eta1);
  gram_schmidt(xi0, xi1);
  return RankOnePair{std::move(eta0), std::move(eta1), std::move(xi0), std::move(xi1)};
}

Complex expectation(const BipartiteState& state, const LocalOperator& op_a,
                    const LocalOperator& op_b) {
  if (op_a.side == op_b.side) {
    throw std::invalid_argument("expectation: operators must address different subsystems");
  }
  const LocalOperator& a = op_a.side == Subsystem::A ? op_a : op_b;
  const LocalOperator& b = op_a.side == Subsystem::A ? op_b : op_a;
  if (a.matrix.rows() != a.matrix.cols() || a.matrix.rows() != state.idx.dim_a) {
    throw std::invalid_argument("expectation: a-side operator dimension mismatch");
  }
  if (b.matrix.rows() != b.matrix.cols() || b.matrix.rows() != state.idx.dim_b) {
    throw std::invalid_argument("expectation: b-side operator dimension mismatch");
  }
  return (state.rho * kron(a.matrix, b.matrix)).trace();
}

std::pair<LocalOperator, LocalOperator> rank_one(const RankOnePair& pair) {
  return {LocalOperator{Subsystem::A, pair.eta0 * pair.eta1.adjoint()},
          LocalOperator{Subsystem::B, pair.xi0 * pair.xi1.adjoint()}};
}

bool KappaReport::consistent(double tol) const {
  const double lhs = std::norm(mean_op);
  const double rhs = condition == Condition::First ? mean_AdABdB : mean_AdA * mean_BdB;
  return std::abs(kappa - (lhs - rhs)) <= tol;
}

namespace {

double real_expectation(const BipartiteState& state, const LocalOperator& a,
                        const LocalOperator& b, const char* what) {
  const Complex v = expectation(state, a, b);
  if (std::abs(v.imag()) > 1e-10) {
    throw std::runtime_error(std::string("kappa: expectation of ") + what +
                             " has imaginary part " + std::to_string(v.imag()));
  }
  return v.real();
}

}  // namespace

KappaReport kappa_first(const BipartiteState& state, const LocalOperator& a,
                        const LocalOperator& b) {
  if (a.side != Subsystem::A || b.side != Subsystem::B) {
    throw std::invalid_argument("kappa_first: pass the a-side operator first");
  }
  KappaReport r;
  r.condition = Condition::First;
  r.mean_op = expectation(state, LocalOperator{Subsystem::A, a.matrix.adjoint()}, b);
  r.mean_AdABdB =
      real_expectation(state, LocalOperator{Subsystem::A, a.matrix.adjoint() * a.matrix},
                       LocalOperator{Subsystem::B, b.matrix.adjoint() * b.matrix}, "A^dag A B^dag B");
  r.kappa = std::norm(r.mean_op) - r.mean_AdABdB;
  return r;
}

KappaReport kappa_first(const BipartiteState& state, const RankOnePair& pair) {
  const auto [a, b] = rank_one(pair);
  KappaReport r = kappa_first(state, a, b);
  const LocalOperator p_eta0{Subsystem::A, pair.eta0 * pair.eta0.adjoint()};
  const LocalOperator p_eta1{Subsystem::A, pair.eta1 * pair.eta1.adjoint()};
  const LocalOperator p_xi0{Subsystem::B, pair.xi0 * pair.xi0.adjoint()};
  const LocalOperator p_xi1{Subsystem::B, pair.xi1 * pair.xi1.adjoint()};
  double a_diag = real_expectation(state, p_eta0, p_xi0, "P_eta0 P_xi0") +
                  real_expectation(state, p_eta1, p_xi1, "P_eta1 P_xi1");
  r.a_diag = std::clamp(a_diag, 0.0, 1.0);
  return r;
}

KappaReport kappa_second(const BipartiteState& state, const LocalOperator& a,
                         const LocalOperator& b) {
  if (a.side != Subsystem::A || b.side != Subsystem::B) {
    throw std::invalid_argument("kappa_second: pass the a-side operator first");
  }
  KappaReport r;
  r.condition = Condition::Second;
  r.mean_op = expectation(state, a, b);
  r.mean_AdA = real_expectation(
      state, LocalOperator{Subsystem::A, a.matrix.adjoint() * a.matrix},
      LocalOperator{Subsystem::B, Matrix::Identity(state.idx.dim_b, state.idx.dim_b)}, "A^dag A");
  r.mean_BdB = real_expectation(
      state, LocalOperator{Subsystem::A, Matrix::Identity(state.idx.dim_a, state.idx.dim_a)},
      LocalOperator{Subsystem::B, b.matrix.adjoint() * b.matrix}, "B^dag B");
  r.kappa = std::norm(r.mean_op) - r.mean_AdA * r.mean_BdB;
  return r;
}

KappaReport kappa_second(const BipartiteState& state, const RankOnePair& pair) {
  const auto [a, b] = rank_one(pair);
  KappaReport r = kappa_second(state, a, b);
  // With A = |eta0><eta1| the annihilated levels are eta1/xi1; the bound
  // tailored to qubits uses the diagonal weight of that joint level.
  const LocalOperator p_eta1{Subsystem::A, pair.eta1 * pair.eta1.adjoint()};
  const LocalOperator p_xi1{Subsystem::B, pair.xi1 * pair.xi1.adjoint()};
  r.alpha = std::clamp(real_expectation(state, p_eta1, p_xi1, "P_eta1 P_xi1"), 0.0, 1.0);
  return r;
}

namespace {

Vector basis_vec(Eigen::Index dim, Eigen::Index k) {
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return v;
}

}  // namespace

std::vector<NamedOperatorPair> four_qubit_operator_sets() {
  std::vector<NamedOperatorPair> out;

  // Coarse choice: first qubit of each side, identity on the second.
  Matrix lower = Matrix::Zero(2, 2);
  lower(0, 1) = 1.0;  // |0><1|
  const Matrix id2 = Matrix::Identity(2, 2);
  out.push_back(NamedOperatorPair{
      "coarse",
      LocalOperator{Subsystem::A, kron(lower, id2)},
      LocalOperator{Subsystem::B, kron(lower.adjoint(), id2)},
      std::nullopt,
  });

  // Fine choices: rank-one pairs inside the two orthogonal blocks
  // span{|00>, |10>} and span{|01>, |11>} of each side.
  const RankOnePair fine1 = RankOnePair::make(basis_vec(4, 0), basis_vec(4, 2),
                                              basis_vec(4, 2), basis_vec(4, 0));
  const auto [a1, b1] = rank_one(fine1);
  out.push_back(NamedOperatorPair{"fine1", a1, b1, fine1});

  const RankOnePair fine2 = RankOnePair::make(basis_vec(4, 1), basis_vec(4, 3),
                                              basis_vec(4, 3), basis_vec(4, 1));
  const auto [a2, b2] = rank_one(fine2);
  out.push_back(NamedOperatorPair{"fine2", a2, b2, fine2});

  return out;
}

RankOnePair sigma_minus_pair() {
  return RankOnePair::make(basis_vec(2, 0), basis_vec(2, 1), basis_vec(2, 0), basis_vec(2, 1));
}

RankOnePair sigma_plus_pair() {
  return RankOnePair::make(basis_vec(2, 1), basis_vec(2, 0), basis_vec(2, 1), basis_vec(2, 0));
}

RankOnePair x_basis_pair() {
  Vector plus(2), minus(2);
  plus << 1.0, 1.0;
  minus << 1.0, -1.0;
  plus /= std::numbers::sqrt2;
  minus /= std::numbers::sqrt2;
  return RankOnePair::make(plus, minus, minus, plus);
}

}  // namespace negabound
