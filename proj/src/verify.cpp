#include "negabound/verify.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "negabound/dicke.hpp"
#include "negabound/io.hpp"
#include "negabound/search.hpp"
#include "negabound/sweep.hpp"

namespace negabound {

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  explicit Recorder(std::string name) : start_(Clock::now()) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (static_cast<int>(result_.failure_details.size()) < kMaxRecordedFailures) {
        result_.failure_details.push_back(what);
      }
    }
  }

  void close_to(double actual, double expected, double tol, const std::string& what) {
    check(std::isfinite(actual) && std::abs(actual - expected) <= tol,
          what + ": got " + format_sig12(actual) + ", expected " + format_sig12(expected) +
              " (tol " + format_sig12(tol) + ")");
  }

  void at_most(double value, double cap, const std::string& what) {
    check(std::isfinite(value) && value <= cap,
          what + ": " + format_sig12(value) + " exceeds " + format_sig12(cap));
  }

  SuiteResult finish() {
    result_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return result_;
  }

 private:
  SuiteResult result_;
  Clock::time_point start_;
};

double uniform01(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

/// Seeded random orthonormal pair through the same parameterization the
/// optimizer explores.
RankOnePair random_pair(const BipartiteIndex& idx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RealParams p(pair_parameter_count(idx));
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    p(i) = (2.0 * uniform01(rng) - 1.0) * std::numbers::pi;
  }
  return parameterize_pair(idx, p);
}

/// Haar-ish random unitary: QR of a square matrix of Gaussian entries.
Matrix random_unitary(int dim, std::uint64_t seed) {
  const PureState gauss = random_pure(BipartiteIndex{dim, dim}, seed);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) m(i, k) = gauss.amplitudes(i * dim + k);
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ();
}

}  // namespace

SuiteResult verify_golden() {
  Recorder rec("golden");

  const BoundCertificate fq = bound_first_qubit(0.25);
  rec.check(fq.applicable, "first-qubit bound applicable at kappa = 1/4");
  rec.close_to(fq.lower_bound, 0.5 * (std::numbers::sqrt2 - 1.0), 1e-9,
               "first-qubit bound at kappa = 1/4");

  // Full pipeline on the balanced pair state: kappa = 1/4 with vanishing
  // <A^dag A B^dag B>, so the closed-form x = 0 quadratic applies.
  const BipartiteState bell = make_bell_like(0.5).density();
  const KappaReport r = kappa_first(bell, sigma_minus_pair());
  rec.close_to(r.kappa, 0.25, 1e-12, "balanced-pair kappa, lowering operators");
  rec.at_most(std::abs(r.mean_AdABdB), 1e-12, "balanced-pair <A^dag A B^dag B>");
  const BoundCertificate zx = bound_second_zero_x(r.kappa, 1.0);
  rec.check(zx.applicable, "x = 0 quadratic applicable at kappa = 1/4");
  rec.close_to(zx.lower_bound, std::sqrt(5.0) - 2.0, 1e-9, "x = 0 quadratic bound at kappa = 1/4");

  const BoundCertificate bis = bound_second_method(0.25, 0.0, 1.0);
  rec.check(bis.applicable, "bisection bound applicable at (1/4, 0, 1)");
  rec.close_to(bis.lower_bound, 0.125, 1e-9, "bisection bound at (1/4, 0, 1)");

  rec.close_to(bound_first_improved(0.25, 0.5).lower_bound, 0.5 * (std::sqrt(1.25) - 0.5), 1e-12,
               "improved bound at kappa = 1/4, a = 1/2");

  for (int n : {2, 4, 6}) {
    const PureState ps = make_max_entangled(n);
    const double expected = 0.5 * (n - 1.0);
    rec.close_to(negativity_exact(ps), expected, 1e-9,
                 "maximally entangled negativity, n = " + std::to_string(n));
    const SchmidtData sd = schmidt(ps);
    const BipartiteState rho = ps.density();
    double best = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
      const auto [a, b] = schmidt_partition_operators(sd, k);
      const BoundCertificate cert = bound_schmidt_known(rho, a, b);
      if (cert.applicable && cert.lower_bound > best) best = cert.lower_bound;
    }
    rec.close_to(best, expected, 1e-9,
                 "Schmidt-partition bound, maximally entangled n = " + std::to_string(n));
  }

  rec.close_to(negativity_exact(make_noisy(0.5, 2.0 / 3.0)), 0.25, 1e-9,
               "depolarized balanced pair at p = 2/3");
  rec.close_to(negativity_exact(make_four_qubit({0.4, 0.1, 0.4, 0.1})), 1.3, 1e-9,
               "four-qubit family at weights (0.4, 0.1, 0.4, 0.1)");

  // Second condition on the |00>+|11> pair with raising operators: kappa
  // vanishes but alpha = 1/2 still yields 1/2 on the negative branch.
  Vector amp = Vector::Zero(4);
  amp(0) = amp(3) = 1.0 / std::numbers::sqrt2;
  const BipartiteState phi = PureState::make(BipartiteIndex{2, 2}, std::move(amp)).density();
  const KappaReport r2 = kappa_second(phi, sigma_plus_pair());
  rec.close_to(r2.kappa, 0.0, 1e-12, "second-condition kappa on |00>+|11>, raising operators");
  rec.close_to(r2.alpha.value(), 0.5, 1e-12, "alpha on |00>+|11>");
  const BoundCertificate qb = bound_second_qubit(r2.kappa, r2.alpha.value(), true);
  rec.check(qb.applicable, "second-qubit bound admitted at kappa = 0 with the branch flag");
  rec.close_to(qb.lower_bound, 0.5, 1e-9, "second-qubit bound on |00>+|11>");

  return rec.finish();
}

SuiteResult verify_crossings() {
  Recorder rec("crossings");
  const RankOnePair pair = x_basis_pair();
  const auto kappa_at = [&](double lambda0) {
    return kappa_first(make_bell_like(lambda0).density(), pair).kappa;
  };

  // Closed form: with u = 2 sqrt(lambda0 (1 - lambda0)),
  // kappa = (u^2 + 6u - 3) / 16.
  for (int i = 0; i <= 100; ++i) {
    const double l0 = i / 100.0;
    const double u = 2.0 * std::sqrt(l0 * (1.0 - l0));
    rec.close_to(kappa_at(l0), (u * u + 6.0 * u - 3.0) / 16.0, 1e-10,
                 "x-basis kappa closed form at lambda0 = " + format_sig12(l0));
  }

  // Grid scan for sign changes, then bisection to 1e-6.
  constexpr int kPoints = 201;
  std::vector<double> grid(kPoints), values(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    grid[static_cast<std::size_t>(i)] = i / static_cast<double>(kPoints - 1);
    values[static_cast<std::size_t>(i)] = kappa_at(grid[static_cast<std::size_t>(i)]);
  }
  std::vector<double> roots;
  for (int i = 0; i + 1 < kPoints; ++i) {
    double lo = grid[static_cast<std::size_t>(i)], hi = grid[static_cast<std::size_t>(i) + 1];
    double flo = values[static_cast<std::size_t>(i)], fhi = values[static_cast<std::size_t>(i) + 1];
    if ((flo <= 0.0) == (fhi <= 0.0)) continue;
    while (hi - lo > 1e-6) {
      const double mid = 0.5 * (lo + hi);
      const double fmid = kappa_at(mid);
      if ((fmid <= 0.0) == (flo <= 0.0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
        fhi = fmid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  rec.check(roots.size() == 2,
            "expected exactly 2 sign changes, found " + std::to_string(roots.size()));
  if (roots.size() == 2) {
    rec.close_to(roots[0], 0.057109, 1e-5, "lower zero crossing of the x-basis kappa");
    rec.close_to(roots[1], 0.942891, 1e-5, "upper zero crossing of the x-basis kappa");
  }
  return rec.finish();
}

SuiteResult verify_four_qubit_grid() {
  Recorder rec("four_qubit_grid");
  const auto sets = four_qubit_operator_sets();

  constexpr int kPoints = 201;
  for (int i = 0; i < kPoints; ++i) {
    const double l00 = 0.5 * i / static_cast<double>(kPoints - 1);
    const double rest = 0.5 * (1.0 - 2.0 * l00);
    const PureState ps = make_four_qubit({l00, rest, l00, rest});
    const BipartiteState rho = ps.density();
    const std::string at = " at lambda00 = " + format_sig12(l00);

    const double kc = kappa_first(rho, sets[0].a, sets[0].b).kappa;
    rec.close_to(kc, 0.25, 1e-10, "coarse kappa constant" + at);

    const double k1 = kappa_first(rho, *sets[1].pair).kappa;
    const double k2 = kappa_first(rho, *sets[2].pair).kappa;
    rec.close_to(k1, l00 * l00, 1e-10, "fine kappa_1" + at);
    rec.close_to(k2, rest * rest, 1e-10, "fine kappa_2" + at);

    const BoundCertificate coarse = bound_first_qubit(kc);
    const BoundCertificate fine = bound_multi_block({k1, k2});
    rec.check(coarse.applicable, "coarse bound applicable" + at);
    const double fine_value = fine.applicable ? fine.lower_bound : 0.0;
    rec.check(coarse.lower_bound >= fine_value - 1e-12,
              "coarse bound " + format_sig12(coarse.lower_bound) + " below combined fine bound " +
                  format_sig12(fine_value) + at);

    rec.close_to(negativity_exact(ps), 0.5 * (1.0 + 8.0 * std::sqrt(l00 * rest)), 1e-9,
                 "symmetric four-qubit negativity closed form" + at);
  }
  return rec.finish();
}

SuiteResult verify_soundness(int n_states, int n_pairs, std::uint64_t seed) {
  Recorder rec("soundness");
  if (n_states < 1 || n_pairs < 1) {
    throw std::invalid_argument("verify_soundness: counts must be >= 1");
  }
  const BipartiteIndex idx{2, 2};
  const BoundMethod methods[] = {BoundMethod::FirstQubit, BoundMethod::FirstImproved,
                                 BoundMethod::SecondMethod, BoundMethod::SecondQubit};
  for (int i = 0; i < n_states; ++i) {
    const BipartiteState state = random_mixed(idx, 4, seed + static_cast<std::uint64_t>(i));
    const double neg = negativity_exact(state);
    for (int p = 0; p < n_pairs; ++p) {
      const std::uint64_t pair_seed =
          seed + 1000003u * static_cast<std::uint64_t>(i) + static_cast<std::uint64_t>(p) + 1u;
      const RankOnePair pair = random_pair(idx, pair_seed);
      const std::string tag =
          " (state seed " + std::to_string(seed + static_cast<std::uint64_t>(i)) + ", pair seed " +
          std::to_string(pair_seed) + ")";
      for (BoundMethod method : methods) {
        const BoundCertificate cert = evaluate_bound(state, pair, method);
        if (!cert.applicable) continue;
        rec.at_most(cert.lower_bound, neg + 1e-9,
                    to_string(method) + " certificate exceeds exact negativity" + tag);
      }
      // The quadratic weakening must stay below the bisection value.
      const KappaReport r = kappa_first(state, pair);
      if (r.kappa > 0.0 && r.mean_AdABdB > 1e-12) {
        const BoundCertificate quad = bound_second_method_quadratic(r.kappa, r.mean_AdABdB, 1.0);
        const BoundCertificate full = bound_second_method(r.kappa, r.mean_AdABdB, 1.0);
        if (quad.applicable && full.applicable) {
          rec.at_most(quad.lower_bound, full.lower_bound + 1e-9,
                      "quadratic weakening exceeds the bisection bound" + tag);
        }
      }
    }
  }
  return rec.finish();
}

SuiteResult verify_separability(int n_states, int n_pairs, std::uint64_t seed) {
  Recorder rec("separability");
  if (n_states < 1 || n_pairs < 1) {
    throw std::invalid_argument("verify_separability: counts must be >= 1");
  }
  const int dims[4][2] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (int i = 0; i < n_states; ++i) {
    const auto& d = dims[i % 4];
    const BipartiteIndex idx{d[0], d[1]};
    const std::uint64_t s = seed + 7919u * static_cast<std::uint64_t>(i);

    // Even i: one product; odd i: a three-component mixture of products.
    Matrix rho = Matrix::Zero(idx.total(), idx.total());
    const int components = (i % 2 == 0) ? 1 : 3;
    std::mt19937_64 wrng(s);
    double wsum = 0.0;
    std::vector<double> w(static_cast<std::size_t>(components));
    for (double& x : w) {
      x = uniform01(wrng) + 1e-3;
      wsum += x;
    }
    for (int c = 0; c < components; ++c) {
      rho += (w[static_cast<std::size_t>(c)] / wsum) *
             kron(random_density_matrix(d[0], d[0], s + 2u * static_cast<std::uint64_t>(c) + 1u),
                  random_density_matrix(d[1], d[1], s + 2u * static_cast<std::uint64_t>(c) + 2u));
    }
    const BipartiteState state = BipartiteState::make(idx, std::move(rho));

    for (int p = 0; p < n_pairs; ++p) {
      const std::uint64_t pair_seed = s + 104729u + static_cast<std::uint64_t>(p);
      const RankOnePair pair = random_pair(idx, pair_seed);
      const std::string tag = " (state seed " + std::to_string(s) + ", pair seed " +
                              std::to_string(pair_seed) + ", dims " + std::to_string(d[0]) + "x" +
                              std::to_string(d[1]) + ")";
      rec.at_most(kappa_first(state, pair).kappa, 1e-10,
                  "first condition flags a separable state" + tag);
      rec.at_most(kappa_second(state, pair).kappa, 1e-10,
                  "second condition flags a separable state" + tag);
    }
  }
  return rec.finish();
}

SuiteResult verify_pinching(int n_states, std::uint64_t seed) {
  Recorder rec("pinching");
  if (n_states < 1) throw std::invalid_argument("verify_pinching: counts must be >= 1");
  const BipartiteIndex idx{4, 4};
  for (int i = 0; i < n_states; ++i) {
    const std::uint64_t s = seed + 31u * static_cast<std::uint64_t>(i);
    const BipartiteState state = random_mixed(idx, 16, s);

    // Random orthogonal 2+2 splittings on each side.
    const Matrix ua = random_unitary(4, s + 1);
    const Matrix ub = random_unitary(4, s + 2);
    const auto half = [](const Matrix& u, int first) {
      const Matrix cols = u.block(0, first, 4, 2);
      return Matrix(cols * cols.adjoint());
    };
    const std::vector<ProjectorPair> blocks = {
        ProjectorPair::make(half(ua, 0), half(ub, 0)),
        ProjectorPair::make(half(ua, 2), half(ub, 2)),
    };

    const std::vector<double> norms = pinched_norms(state, blocks);
    double total = 0.0;
    for (double v : norms) total += v;
    const double full = trace_norm(partial_transpose(state.rho, state.idx));
    rec.at_most(total, full + 1e-9,
                "pinched block norms exceed the full trace norm (state seed " + std::to_string(s) +
                    ")");
  }
  return rec.finish();
}

SuiteResult verify_conservation() {
  Recorder rec("conservation");

  for (double j : {0.5, 2.0, 4.0}) {
    const DickeModel model = DickeModel::make(j, 4);
    const Matrix h = build_hamiltonian_full(model);
    const Matrix c = excitation_operator(model);
    rec.at_most(operator_norm(h * c - c * h), 1e-10,
                "excitation operator does not commute with the Hamiltonian, j = " +
                    format_sig12(j));

    // Conservation along one evolution: the largest usable two-level
    // superposition for this j within the cutoff.
    const int l2 = std::min(model.spin_dim() - 1, model.n_max);
    const PureState initial =
        make_two_level_initial(model, 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2, 0, l2);
    const double e0 = excitation_expectation(model, initial);
    for (int k = 0; k <= 10; ++k) {
      const double t = 50.0 / model.g * k / 10.0;
      const PureState evolved = evolve(model, initial, t);
      rec.close_to(excitation_expectation(model, evolved), e0, 1e-9,
                   "excitation drift at t = " + format_sig12(t) + ", j = " + format_sig12(j));
      rec.close_to(evolved.amplitudes.norm(), 1.0, 1e-9,
                   "norm drift at t = " + format_sig12(t) + ", j = " + format_sig12(j));
    }
  }

  // Sector evolution against the full-space propagator.
  {
    const DickeModel model = DickeModel::make(2.0, 4);
    const PureState initial =
        make_two_level_initial(model, std::sqrt(0.3), Complex(0.0, std::sqrt(0.7)), 0, 3);
    const EigResult eig = hermitian_eigs(build_hamiltonian_full(model));
    for (double t : {0.9, 4.3, 17.0}) {
      Vector phases(eig.values.size());
      for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases(k) = std::polar(1.0, -eig.values(k) * t);
      }
      const Vector full = eig.vectors * phases.asDiagonal() *
                          (eig.vectors.adjoint() * initial.amplitudes);
      const PureState fast = evolve(model, initial, t);
      rec.at_most((fast.amplitudes - full).cwiseAbs().maxCoeff(), 1e-8,
                  "sector evolution deviates from the full propagator at t = " + format_sig12(t));
    }
  }

  // One-excitation oscillation: starting from spin level 1 and vacuum at
  // j = 1/2, the excited population is cos^2(gt).
  {
    const DickeModel model = DickeModel::make(0.5, 2);
    const PureState initial = spin_field_basis_state(model, 1, 0);
    for (int k = 0; k <= 20; ++k) {
      const double t = 0.5 * k;
      const PureState evolved = evolve(model, initial, t);
      const double pop = std::norm(evolved.amplitudes(1 * model.field_dim() + 0));
      const double c = std::cos(model.g * t);
      rec.close_to(pop, c * c, 1e-9, "one-excitation population at t = " + format_sig12(t));
    }
  }

  return rec.finish();
}

SuiteResult verify_schmidt_window() {
  Recorder rec("schmidt_window");

  // Two-sector superposition with a predicted three-vector window.
  {
    const DickeModel model = DickeModel::make(4.0, 4);
    const Complex c = 1.0 / std::numbers::sqrt2;
    constexpr int kSamples = 40;
    int all_confirmed = 0;
    for (int k = 0; k < kSamples; ++k) {
      const double t = (k + 1) * 1.37;  // incommensurate with the sector gaps
      const SchmidtVectorReport report = schmidt_vector_check(model, c, c, 0, 4, t);
      rec.check(report.entries.size() == 3,
                "expected a 3-vector window, got " + std::to_string(report.entries.size()));
      bool all = true;
      for (const SchmidtVectorEntry& e : report.entries) {
        if (e.status == SchmidtVectorStatus::Failed) {
          rec.check(false, "window vector s = " + std::to_string(e.s) +
                               " failed outright at t = " + format_sig12(t) + " (overlaps " +
                               format_sig12(e.overlap_a) + ", " + format_sig12(e.overlap_b) + ")");
        }
        all = all && e.status == SchmidtVectorStatus::Confirmed;
      }
      if (all) ++all_confirmed;
    }
    const double rate = static_cast<double>(all_confirmed) / kSamples;
    rec.check(rate >= 0.9, "window confirmation rate " + format_sig12(rate) + " below 0.9");
  }

  // Single populated sector: every product vector is a Schmidt vector, and
  // the partition bound from them stays below the exact negativity.
  {
    const DickeModel model = DickeModel::make(2.0, 4);
    for (double t : {0.8, 2.0, 5.5}) {
      const SchmidtVectorReport report = schmidt_vector_check(model, 1.0, 0.0, 3, 4, t);
      rec.check(report.entries.size() == 4,
                "single-sector check should list 4 product vectors, got " +
                    std::to_string(report.entries.size()));
      for (const SchmidtVectorEntry& e : report.entries) {
        rec.check(e.status != SchmidtVectorStatus::Failed,
                  "single-sector product vector (l = " + std::to_string(e.spin_level) + ", n = " +
                      std::to_string(e.boson_level) + ") failed at t = " + format_sig12(t));
      }
      const DickeBoundResult bound = dicke_schmidt_bound(model, 1.0, 0.0, 3, 4, t);
      const double neg = negativity_exact(bound.check.evolved);
      if (bound.certificate.applicable) {
        rec.at_most(bound.certificate.lower_bound, neg + 1e-9,
                    "partition bound exceeds exact negativity at t = " + format_sig12(t));
      }
    }
  }

  // At t = 0 the two-sector initial state is a product, so no usable
  // Schmidt knowledge exists and the certificate must not claim a bound.
  {
    const DickeModel model = DickeModel::make(4.0, 4);
    const Complex c = 1.0 / std::numbers::sqrt2;
    const DickeBoundResult bound = dicke_schmidt_bound(model, c, c, 0, 4, 0.0);
    rec.check(!bound.certificate.applicable,
              "product state at t = 0 must not yield an applicable certificate");
    rec.at_most(negativity_exact(bound.check.evolved), 1e-9, "t = 0 state is not a product");
  }

  return rec.finish();
}

SuiteResult verify_formulas() {
  Recorder rec("formulas");
  const RankOnePair lowering = sigma_minus_pair();
  const RankOnePair xpair = x_basis_pair();

  for (int i = 0; i <= 100; ++i) {
    const double l0 = i / 100.0;
    const double l1 = 1.0 - l0;
    const std::string at = " at lambda0 = " + format_sig12(l0);

    // Pure family: kappa = lambda0 lambda1 and the improved bound is tight.
    const BipartiteState pure = make_bell_like(l0).density();
    const KappaReport rp = kappa_first(pure, lowering);
    rec.close_to(rp.kappa, l0 * l1, 1e-10, "pure kappa, lowering operators" + at);
    rec.at_most(std::abs(rp.mean_AdABdB), 1e-12, "pure <A^dag A B^dag B>" + at);
    if (rp.kappa > 0.0) {
      rec.close_to(bound_first_improved(rp.kappa, rp.a_diag.value()).lower_bound,
                   negativity_exact(pure), 1e-9, "improved bound tight on the pure family" + at);
    }

    // Diagonal weight of the x-basis pair.
    rec.close_to(kappa_first(pure, xpair).a_diag.value(),
                 0.5 * (1.0 - 2.0 * std::sqrt(l0 * l1)), 1e-10, "x-basis diagonal weight" + at);

    // Depolarized family: kappa = p^2 l0 l1 - (1 - p)/4 and the negativity
    // matches max(0, p sqrt(l0 l1) - (1 - p)/4) from the eigendecomposition.
    for (double p : {1.0, 2.0 / 3.0, 0.9}) {
      const BipartiteState noisy = make_noisy(l0, p);
      rec.close_to(kappa_first(noisy, lowering).kappa, p * p * l0 * l1 - 0.25 * (1.0 - p), 1e-10,
                   "depolarized kappa at p = " + format_sig12(p) + at);
      rec.close_to(negativity_exact(noisy),
                   std::max(0.0, p * std::sqrt(l0 * l1) - 0.25 * (1.0 - p)), 1e-10,
                   "depolarized negativity closed form at p = " + format_sig12(p) + at);
    }
  }

  // Four-qubit kappa values on asymmetric weights.
  const auto sets = four_qubit_operator_sets();
  const std::array<double, 4> tuples[] = {{0.4, 0.3, 0.2, 0.1},
                                          {0.25, 0.25, 0.25, 0.25},
                                          {0.7, 0.1, 0.1, 0.1},
                                          {0.5, 0.2, 0.2, 0.1}};
  for (const auto& l : tuples) {
    const BipartiteState rho = make_four_qubit(l).density();
    const std::string at = " at weights (" + format_sig12(l[0]) + ", " + format_sig12(l[1]) +
                           ", " + format_sig12(l[2]) + ", " + format_sig12(l[3]) + ")";
    const double root = std::sqrt(l[0] * l[2]) + std::sqrt(l[1] * l[3]);
    rec.close_to(kappa_first(rho, sets[0].a, sets[0].b).kappa, root * root, 1e-10,
                 "four-qubit coarse kappa" + at);
    rec.close_to(kappa_first(rho, *sets[1].pair).kappa, l[0] * l[2], 1e-10,
                 "four-qubit kappa_1" + at);
    rec.close_to(kappa_first(rho, *sets[2].pair).kappa, l[1] * l[3], 1e-10,
                 "four-qubit kappa_2" + at);
  }

  // Sweep engine against the same formulas, plus byte determinism.
  SweepSpec spec;
  spec.family = "bell_like";
  spec.variable = "lambda0";
  spec.lo = 0.0;
  spec.hi = 1.0;
  spec.points = 101;
  spec.columns = {SweepColumn{"kappa_first", "kappa_first", Json()},
                  SweepColumn{"negativity_exact", "negativity_exact", Json()},
                  SweepColumn{"bound_first_qubit", "bound_first_qubit", Json()}};
  const SweepTable table = run_sweep(spec);
  rec.check(table.rows.size() == 101, "sweep row count");
  for (const auto& row : table.rows) {
    const double l0 = row[0].value();
    const double kappa = l0 * (1.0 - l0);
    const std::string at = " in sweep at lambda0 = " + format_sig12(l0);
    rec.close_to(row[1].value(), kappa, 1e-10, "sweep kappa column" + at);
    rec.close_to(row[2].value(), std::sqrt(kappa), 1e-10, "sweep negativity column" + at);
    if (kappa > 0.0) {
      rec.close_to(row[3].value(), 0.5 * (std::sqrt(1.0 + 4.0 * kappa) - 1.0), 1e-10,
                   "sweep bound column" + at);
    } else {
      rec.check(!row[3].has_value(), "sweep bound column should be empty" + at);
    }
  }
  rec.check(to_csv(table) == to_csv(run_sweep(spec)), "sweep CSV output is not deterministic");

  return rec.finish();
}

SuiteResult verify_search(std::uint64_t seed) {
  Recorder rec("search");

  const BipartiteState pure = make_bell_like(0.3).density();
  SearchConfig config;
  config.method = BoundMethod::FirstQubit;
  config.restarts = 16;
  config.seed = seed;

  const SearchResult first = optimize(pure, config);
  const SearchResult second = optimize(pure, config);
  rec.check(first.best_certificate == second.best_certificate,
            "repeated searches with one seed disagree");
  rec.check(first.restart_best == second.restart_best,
            "per-restart traces disagree between runs");

  const double canonical = bound_first_qubit(kappa_first(pure, sigma_minus_pair()).kappa).lower_bound;
  rec.check(first.best_certificate.applicable, "search on the pure family found no certificate");
  rec.check(first.best_certificate.lower_bound >= canonical - 1e-12,
            "search fell below the canonical-pair bound: " +
                format_sig12(first.best_certificate.lower_bound) + " < " +
                format_sig12(canonical));
  rec.at_most(first.best_certificate.lower_bound, negativity_exact(pure) + 1e-9,
              "search certificate exceeds the exact negativity");

  const BipartiteState noisy = make_noisy(0.5, 0.8);
  const SearchResult third = optimize(noisy, config);
  const double canonical_noisy =
      bound_first_qubit(kappa_first(noisy, sigma_minus_pair()).kappa).lower_bound;
  rec.check(third.best_certificate.applicable, "search on the depolarized family found no certificate");
  rec.check(third.best_certificate.lower_bound >= canonical_noisy - 1e-12,
            "depolarized search fell below the canonical-pair bound");
  rec.at_most(third.best_certificate.lower_bound, negativity_exact(noisy) + 1e-9,
              "depolarized search certificate exceeds the exact negativity");

  return rec.finish();
}

std::vector<std::string> suite_names() {
  return {"golden",     "crossings",    "four_qubit_grid", "soundness",      "separability",
          "pinching",   "conservation", "schmidt_window",  "formulas",       "search"};
}

SuiteResult run_suite(const std::string& name) {
  if (name == "golden") return verify_golden();
  if (name == "crossings") return verify_crossings();
  if (name == "four_qubit_grid") return verify_four_qubit_grid();
  if (name == "soundness") return verify_soundness();
  if (name == "separability") return verify_separability();
  if (name == "pinching") return verify_pinching();
  if (name == "conservation") return verify_conservation();
  if (name == "schmidt_window") return verify_schmidt_window();
  if (name == "formulas") return verify_formulas();
  if (name == "search") return verify_search();
  throw std::invalid_argument("unknown suite '" + name + "'; expected one of golden, crossings, "
                              "four_qubit_grid, soundness, separability, pinching, conservation, "
                              "schmidt_window, formulas, search");
}

std::vector<SuiteResult> verify_all() {
  std::vector<SuiteResult> results;
  for (const std::string& name : suite_names()) results.push_back(run_suite(name));
  return results;
}

}  // namespace negabound
