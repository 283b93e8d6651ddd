#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "negabound/bounds.hpp"

using namespace negabound;

TEST_CASE("method names round-trip") {
  for (BoundMethod m : {BoundMethod::FirstQubit, BoundMethod::FirstImproved,
                        BoundMethod::MultiBlock, BoundMethod::SecondMethod,
                        BoundMethod::SecondQubit, BoundMethod::SchmidtKnown}) {
    CHECK(bound_method_from_string(to_string(m)) == m);
  }
  CHECK_THROWS_AS(bound_method_from_string("nope"), std::invalid_argument);
}

TEST_CASE("first-condition qubit bound") {
  const BoundCertificate cert = bound_first_qubit(0.25);
  CHECK(cert.applicable);
  CHECK(cert.lower_bound == doctest::Approx(0.5 * (std::sqrt(2.0) - 1.0)).epsilon(1e-14));
  CHECK(cert.lower_bound == doctest::Approx(0.20710678).epsilon(1e-7));
  CHECK(cert.inputs.at("kappa") == 0.25);

  const BoundCertificate off = bound_first_qubit(-0.1);
  CHECK_FALSE(off.applicable);
  CHECK(off.lower_bound == 0.0);
  CHECK(off.notes.find("kappa <= 0") != std::string::npos);
  CHECK_FALSE(bound_first_qubit(0.0).applicable);
}

TEST_CASE("improved first bound: golden value, limits, monotonicity") {
  const BoundCertificate cert = bound_first_improved(0.25, 0.5);
  CHECK(cert.applicable);
  CHECK(cert.lower_bound == doctest::Approx(0.5 * (std::sqrt(1.25) - 0.5)).epsilon(1e-14));
  CHECK(cert.lower_bound == doctest::Approx(0.309017).epsilon(1e-6));

  // a = 1 reproduces the plain qubit bound; smaller a only helps.
  for (double kappa : {0.05, 0.25, 0.6}) {
    CHECK(bound_first_improved(kappa, 1.0).lower_bound ==
          doctest::Approx(bound_first_qubit(kappa).lower_bound).epsilon(1e-14));
    double prev = bound_first_improved(kappa, 1.0).lower_bound;
    for (double a : {0.75, 0.5, 0.25, 0.0}) {
      const double v = bound_first_improved(kappa, a).lower_bound;
      CHECK(v >= prev - 1e-14);
      prev = v;
    }
    // a = 0 turns the bound into sqrt(kappa).
    CHECK(bound_first_improved(kappa, 0.0).lower_bound ==
          doctest::Approx(std::sqrt(kappa)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(bound_first_improved(0.25, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(bound_first_improved(0.25, -0.2), std::invalid_argument);
}

TEST_CASE("multi-block bound sums the positive blocks") {
  const BoundCertificate cert = bound_multi_block({0.04, -0.3, 0.09});
  CHECK(cert.applicable);
  const double expected =
      bound_first_qubit(0.04).lower_bound + bound_first_qubit(0.09).lower_bound;
  CHECK(cert.lower_bound == doctest::Approx(expected).epsilon(1e-14));
  CHECK(cert.inputs.at("blocks") == 3.0);
  CHECK(cert.inputs.at("blocks_positive") == 2.0);
  CHECK(cert.inputs.at("kappa_1") == -0.3);

  const BoundCertificate off = bound_multi_block({-0.1, 0.0});
  CHECK_FALSE(off.applicable);
  CHECK(off.notes == "no block has kappa > 0");
  CHECK_THROWS_AS(bound_multi_block({}), std::invalid_argument);
}

TEST_CASE("second bounding route: bisection") {
  SUBCASE("exact root at x = 0, kappa = 1/4, y = 1") {
    // mu = 1/8 solves sqrt(1/4) = sqrt(1 + mu) sqrt(mu) + mu exactly.
    const BoundCertificate cert = bound_second_method(0.25, 0.0, 1.0);
    CHECK(cert.applicable);
    CHECK(cert.lower_bound == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(cert.lower_bound <= 0.125);  // conservative side of the root
  }
  SUBCASE("returned value satisfies the defining inequality conservatively") {
    for (double kappa : {0.01, 0.2, 0.8}) {
      for (double x : {0.0, 0.05, 0.4}) {
        for (double y : {0.5, 1.0, 2.0}) {
          const BoundCertificate cert = bound_second_method(kappa, x, y);
          REQUIRE(cert.applicable);
          const double mu = cert.lower_bound;
          const auto rhs = [&](double m) {
            return std::sqrt(1.0 + m) * std::sqrt(m * y + x) + m * std::sqrt(y);
          };
          // Just above the returned value the inequality holds; the value
          // itself sits at most one bisection step below the true root.
          CHECK(rhs(mu + 1e-9) >= std::sqrt(kappa + x) - 1e-9);
          CHECK(rhs(std::max(0.0, mu - 1e-9)) <= std::sqrt(kappa + x) + 1e-9);
        }
      }
    }
  }
  SUBCASE("kappa <= 0 is not applicable; bad x or y throws") {
    CHECK_FALSE(bound_second_method(0.0, 0.1, 1.0).applicable);
    CHECK_FALSE(bound_second_method(-0.2, 0.1, 1.0).applicable);
    CHECK_THROWS_AS(bound_second_method(0.25, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(bound_second_method(0.25, 0.1, 0.0), std::invalid_argument);
  }
}

TEST_CASE("second bounding route: quadratic weakening never beats the bisection") {
  for (double kappa : {0.02, 0.25, 0.7}) {
    for (double x : {1e-4, 0.05, 0.3, 1.0}) {
      for (double y : {0.5, 1.0, 3.0}) {
        const BoundCertificate quad = bound_second_method_quadratic(kappa, x, y);
        const BoundCertificate bis = bound_second_method(kappa, x, y);
        REQUIRE(quad.applicable);
        REQUIRE(bis.applicable);
        CHECK(quad.lower_bound <= bis.lower_bound + 1e-9);
        CHECK(quad.lower_bound > 0.0);
      }
    }
  }
  CHECK_FALSE(bound_second_method_quadratic(0.25, 0.0, 1.0).applicable);
  CHECK(bound_second_method_quadratic(0.25, 0.0, 1.0).notes.find("x = 0") != std::string::npos);
  CHECK_THROWS_AS(bound_second_method_quadratic(0.25, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("second bounding route: closed form at x = 0") {
  const BoundCertificate cert = bound_second_zero_x(0.25, 1.0);
  CHECK(cert.applicable);
  CHECK(cert.lower_bound == doctest::Approx(std::sqrt(5.0) - 2.0).epsilon(1e-14));
  CHECK(cert.lower_bound == doctest::Approx(0.2360679775).epsilon(1e-9));
  CHECK(cert.notes == "closed-form quadratic at x = 0");

  // On the pure two-qubit family the cross term vanishes and kappa = N^2, so
  // the closed form reads sqrt(4 + 2N) - 2, which stays below N.
  for (int k = 1; k <= 50; ++k) {
    const double neg = 0.5 * k / 50.0;  // negativity ranges over (0, 1/2]
    const BoundCertificate c = bound_second_zero_x(neg * neg, 1.0);
    REQUIRE(c.applicable);
    CHECK(c.lower_bound <= neg + 1e-12);
  }
  CHECK_FALSE(bound_second_zero_x(0.0, 1.0).applicable);
  CHECK_THROWS_AS(bound_second_zero_x(0.25, 0.0), std::invalid_argument);
}

TEST_CASE("second-condition qubit bound and its branch flag") {
  const BoundCertificate cert = bound_second_qubit(0.04, 0.3);
  CHECK(cert.applicable);
  CHECK(cert.lower_bound ==
        doctest::Approx(0.5 * (std::sqrt(1.3 * 1.3 + 0.16) - 1.0 + 0.3)).epsilon(1e-14));

  // kappa = 0 needs the explicit branch assumption; then the bound is alpha.
  CHECK_FALSE(bound_second_qubit(0.0, 0.5).applicable);
  const BoundCertificate branch = bound_second_qubit(0.0, 0.5, true);
  CHECK(branch.applicable);
  CHECK(branch.lower_bound == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(branch.notes.find("assume_negative_branch") != std::string::npos);
  CHECK_FALSE(bound_second_qubit(-0.1, 0.5, true).applicable);
  CHECK_THROWS_AS(bound_second_qubit(0.1, 1.5), std::invalid_argument);
}

TEST_CASE("pinching: block trace norms never exceed the full trace norm") {
  // Two-block splits of a 3x3-per-side system, random states.
  const BipartiteIndex idx = BipartiteIndex::make(3, 3);
  Matrix p1a = Matrix::Zero(3, 3), p2a = Matrix::Zero(3, 3);
  p1a(0, 0) = p1a(1, 1) = 1.0;
  p2a(2, 2) = 1.0;
  const std::vector<ProjectorPair> blocks{ProjectorPair::make(p1a, p1a),
                                          ProjectorPair::make(p2a, p2a)};
  for (int i = 0; i < 10; ++i) {
    const BipartiteState rho = random_mixed(idx, 4 + (i % 6), 500 + i);
    const std::vector<double> norms = pinched_norms(rho, blocks);
    REQUIRE(norms.size() == 2);
    const double total = trace_norm(partial_transpose(rho.rho, idx));
    CHECK(norms[0] + norms[1] <= total + 1e-9);
  }
  // Overlapping projectors are rejected.
  CHECK_THROWS_AS(
      pinched_norms(random_mixed(idx, 3, 1), {blocks[0], blocks[0]}),
      std::invalid_argument);
  Matrix notproj = Matrix::Identity(3, 3) * 0.5;
  CHECK_THROWS_AS(ProjectorPair::make(notproj, notproj), std::invalid_argument);
}

TEST_CASE("schmidt-knowledge bound") {
  SUBCASE("threshold at 1/4") {
    CHECK_FALSE(bound_schmidt_known(Complex(0.2, 0.0)).applicable);
    CHECK_FALSE(bound_schmidt_known(Complex(0.25, 0.0)).applicable);
    const BoundCertificate cert = bound_schmidt_known(Complex(0.0, 0.3));
    CHECK(cert.applicable);
    CHECK(cert.lower_bound == doctest::Approx(0.1).epsilon(1e-14));
  }
  SUBCASE("partition operators on maximally entangled states are tight") {
    for (int n : {2, 4, 6}) {
      const PureState psi = make_max_entangled(n);
      const SchmidtData sd = schmidt(psi);
      const auto [a, b] = schmidt_partition_operators(sd, n / 2);
      const BoundCertificate cert = bound_schmidt_known(psi.density(), a, b);
      REQUIRE(cert.applicable);
      // (n/2)(n/2)/n = n/4 as the cross expectation, so the bound is exact.
      CHECK(cert.inputs.at("abs_mean_AdB") == doctest::Approx(n / 4.0).epsilon(1e-12));
      CHECK(cert.lower_bound == doctest::Approx((n - 1) / 2.0).epsilon(1e-10));
    }
  }
  SUBCASE("partition size validation") {
    const SchmidtData sd = schmidt(make_max_entangled(4));
    CHECK_THROWS_AS(schmidt_partition_operators(sd, 0), std::invalid_argument);
    CHECK_THROWS_AS(schmidt_partition_operators(sd, 4), std::invalid_argument);
  }
  SUBCASE("evaluated overload rejects non-vanishing cross term") {
    // A = B = |0><1| on a bell-like state leaves <A^dag A B^dag B> = 0, fine;
    // but identity operators have cross term 1 and must be rejected.
    const BipartiteState rho = make_bell_like(0.5).density();
    const LocalOperator ida{Subsystem::A, Matrix::Identity(2, 2)};
    const LocalOperator idb{Subsystem::B, Matrix::Identity(2, 2)};
    CHECK_THROWS_AS(bound_schmidt_known(rho, ida, idb), std::invalid_argument);
  }
}

TEST_CASE("certificate dimension sanity check") {
  BoundCertificate cert;
  cert.lower_bound = 0.4;
  CHECK_NOTHROW(check_certificate_against_dims(cert, BipartiteIndex::make(2, 2)));
  cert.lower_bound = 0.6;  // above (2 - 1)/2
  CHECK_THROWS_AS(check_certificate_against_dims(cert, BipartiteIndex::make(2, 2)),
                  std::logic_error);
  CHECK_NOTHROW(check_certificate_against_dims(cert, BipartiteIndex::make(4, 4)));
}
