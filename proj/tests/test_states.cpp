#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "negabound/states.hpp"

using namespace negabound;

TEST_CASE("state validation rejects malformed inputs") {
  const BipartiteIndex idx = BipartiteIndex::make(2, 2);
  CHECK_THROWS_AS(BipartiteState::make(idx, Matrix::Identity(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteState::make(idx, Matrix::Identity(4, 4)), std::invalid_argument);
  Matrix nonherm = Matrix::Identity(4, 4) / 4.0;
  nonherm(0, 1) = Complex(0.0, 0.3);
  CHECK_THROWS_AS(BipartiteState::make(idx, nonherm), std::invalid_argument);
  Matrix nonpsd = Matrix::Identity(4, 4) / 2.0;
  nonpsd(3, 3) = -0.5;
  CHECK_THROWS_AS(BipartiteState::make(idx, nonpsd), std::invalid_argument);

  Vector amp = Vector::Zero(4);
  amp(0) = 0.9;
  CHECK_THROWS_AS(PureState::make(idx, amp), std::invalid_argument);

  CHECK_THROWS_AS(make_bell_like(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(make_bell_like(1.1), std::invalid_argument);
  CHECK_THROWS_AS(make_noisy(0.5, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(make_four_qubit({0.5, 0.5, 0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(make_max_entangled(1), std::invalid_argument);
  CHECK_THROWS_AS(random_mixed(idx, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_density_matrix(3, 4, 1), std::invalid_argument);
}

TEST_CASE("negativity closed forms on the two-qubit family") {
  // sqrt(l0)|01> + sqrt(1-l0)|10> has negativity sqrt(l0 l1).
  for (double l0 : {0.0, 0.1, 0.25, 0.5, 0.8, 1.0}) {
    const PureState psi = make_bell_like(l0);
    const double expected = std::sqrt(l0 * (1.0 - l0));
    CHECK(negativity_exact(psi) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(negativity_exact(psi.density()) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(negativity_pure(schmidt(psi)) == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(negativity_exact(make_bell_like(0.5)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("noisy-state negativity closed form") {
  // p |psi><psi| + (1-p) I/4 has negativity max(0, p sqrt(l0 l1) - (1-p)/4).
  for (double p : {0.0, 0.4, 2.0 / 3.0, 0.9, 1.0}) {
    for (double l0 : {0.1, 0.3, 0.5}) {
      const double expected =
          std::max(0.0, p * std::sqrt(l0 * (1.0 - l0)) - (1.0 - p) / 4.0);
      CHECK(negativity_exact(make_noisy(l0, p)) == doctest::Approx(expected).epsilon(1e-10));
    }
  }
  CHECK(negativity_exact(make_noisy(0.5, 2.0 / 3.0)) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("four-qubit family: negativity and reduced state") {
  const std::array<double, 4> lambdas{0.4, 0.1, 0.4, 0.1};
  const PureState psi = make_four_qubit(lambdas);
  REQUIRE(psi.idx == BipartiteIndex::make(4, 4));
  double sum_sqrt = 0.0;
  for (double l : lambdas) sum_sqrt += std::sqrt(l);
  const double expected = 0.5 * (sum_sqrt * sum_sqrt - 1.0);
  CHECK(expected == doctest::Approx(1.3).epsilon(1e-12));
  CHECK(negativity_exact(psi) == doctest::Approx(expected).epsilon(1e-10));

  // The a-side reduced state is diag(lambdas) in the two-qubit basis |jk>.
  const Matrix red = partial_trace(psi.density().rho, psi.idx, Subsystem::A);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      const double want = (m == n) ? lambdas[static_cast<std::size_t>(m)] : 0.0;
      CHECK(std::abs(red(m, n) - want) < 1e-12);
    }
}

TEST_CASE("maximally entangled states") {
  for (int n : {2, 4, 6}) {
    const PureState psi = make_max_entangled(n);
    CHECK(negativity_exact(psi) == doctest::Approx((n - 1) / 2.0).epsilon(1e-12));
    const SchmidtData sd = schmidt(psi);
    REQUIRE(sd.coefficients.size() == n);
    for (int j = 0; j < n; ++j) {
      CHECK(sd.coefficients[j] == doctest::Approx(1.0 / std::sqrt(n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("schmidt decomposition properties") {
  const PureState psi = random_pure(BipartiteIndex::make(3, 4), 17);
  const SchmidtData sd = schmidt(psi);
  REQUIRE(sd.coefficients.size() == 3);

  SUBCASE("coefficients: descending, normalized, match reduced spectrum") {
    double sum = 0.0;
    for (int j = 0; j < 3; ++j) {
      CHECK(sd.coefficients[j] >= 0.0);
      if (j > 0) CHECK(sd.coefficients[j - 1] >= sd.coefficients[j]);
      sum += sd.coefficients[j] * sd.coefficients[j];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    const EigResult eig =
        hermitian_eigs(partial_trace(psi.density().rho, psi.idx, Subsystem::A));
    for (int j = 0; j < 3; ++j) {
      CHECK(sd.coefficients[j] * sd.coefficients[j] ==
            doctest::Approx(eig.values[j]).epsilon(1e-10));
    }
  }

  SUBCASE("bases orthonormal, reconstruction exact, phase fixed") {
    for (std::size_t j = 0; j < sd.basis_a.size(); ++j) {
      CHECK(std::abs(sd.basis_a[j].norm() - 1.0) < 1e-12);
      CHECK(std::abs(sd.basis_b[j].norm() - 1.0) < 1e-12);
      for (std::size_t k = j + 1; k < sd.basis_a.size(); ++k) {
        CHECK(std::abs(sd.basis_a[j].dot(sd.basis_a[k])) < 1e-12);
        CHECK(std::abs(sd.basis_b[j].dot(sd.basis_b[k])) < 1e-12);
      }
      Eigen::Index imax = 0;
      sd.basis_a[j].cwiseAbs().maxCoeff(&imax);
      CHECK(sd.basis_a[j](imax).imag() == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(sd.basis_a[j](imax).real() > 0.0);
    }
    CHECK((sd.reconstruct() - psi.amplitudes).cwiseAbs().maxCoeff() < 1e-12);
  }

  SUBCASE("deterministic across repeated calls") {
    const SchmidtData sd2 = schmidt(psi);
    CHECK((sd2.coefficients - sd.coefficients).cwiseAbs().maxCoeff() == 0.0);
    for (std::size_t j = 0; j < sd.basis_a.size(); ++j) {
      CHECK((sd2.basis_a[j] - sd.basis_a[j]).cwiseAbs().maxCoeff() == 0.0);
      CHECK((sd2.basis_b[j] - sd.basis_b[j]).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("random ensembles: validity and determinism") {
  const BipartiteIndex idx = BipartiteIndex::make(2, 3);
  const PureState p1 = random_pure(idx, 99);
  const PureState p2 = random_pure(idx, 99);
  CHECK((p1.amplitudes - p2.amplitudes).cwiseAbs().maxCoeff() == 0.0);
  CHECK((p1.amplitudes - random_pure(idx, 100).amplitudes).cwiseAbs().maxCoeff() > 1e-3);

  const BipartiteState m1 = random_mixed(idx, 4, 7);
  const BipartiteState m2 = random_mixed(idx, 4, 7);
  CHECK((m1.rho - m2.rho).cwiseAbs().maxCoeff() == 0.0);
  CHECK(std::abs(m1.rho.trace().real() - 1.0) < 1e-12);

  const Matrix d = random_density_matrix(3, 2, 5);
  CHECK(std::abs(d.trace().real() - 1.0) < 1e-12);
  CHECK(hermiticity_defect(d) < 1e-14);
  const EigResult eig = hermitian_eigs(d);
  CHECK(eig.values.minCoeff() > -1e-12);
  // Rank-2 factor: exactly one zero eigenvalue on a 3-dim space.
  CHECK(eig.values[2] < 1e-12);
  CHECK(eig.values[1] > 1e-6);
}

TEST_CASE("random two-qubit mixed states include both entangled and PPT draws") {
  int entangled = 0;
  const int trials = 100;
  for (int i = 0; i < trials; ++i) {
    if (negativity_exact(random_mixed(BipartiteIndex::make(2, 2), 4, 1000 + i)) > 1e-9) {
      ++entangled;
    }
  }
  CHECK(entangled > 0);
  CHECK(entangled < trials);
}
