#include "negabound/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "negabound/parallel.hpp"

namespace negabound {

int pair_parameter_count(const BipartiteIndex& idx) {
  return static_cast<int>(4 * idx.dim_a - 4 + 4 * idx.dim_b - 4);
}

namespace {

/// In-place Givens rotation with phase on coordinates (i, k):
///   v_i <- cos(t) v_i - e^{-i phi} sin(t) v_k
///   v_k <- e^{i phi} sin(t) v_i + cos(t) v_k
void apply_givens(Vector& v, Eigen::Index i, Eigen::Index k, double theta, double phi) {
  const double c = std::cos(theta), s = std::sin(theta);
  const Complex e_plus = std::polar(1.0, phi);
  const Complex vi = v(i), vk = v(k);
  v(i) = c * vi - std::conj(e_plus) * s * vk;
  v(k) = e_plus * s * vi + c * vk;
}

/// One subsystem's orthonormal pair from 4d-4 reals: a rotation chain
/// carrying e0 to w0 (d-1 angle/phase pairs + a global phase), and a chain
/// inside the orthogonal complement carrying e1 to w1 (d-2 pairs + a phase),
/// pushed through the first chain to stay orthogonal to w0.
std::pair<Vector, Vector> pair_from_params(Eigen::Index dim, const double* p) {
  Vector w0 = Vector::Zero(dim);
  Vector w1 = Vector::Zero(dim);
  w0(0) = 1.0;
  w1(1) = 1.0;
  std::size_t at = 0;
  // Chain for w1 first: rotations among coordinates {1, .., dim-1} keep the
  // 0-component zero, so orthogonality survives the shared chain below.
  const std::size_t chain0_at = 0;
  at = static_cast<std::size_t>(2 * (dim - 1)) + 1;  // skip chain 0 + its phase
  for (Eigen::Index k = 2; k < dim; ++k) {
    apply_givens(w1, 1, k, p[at], p[at + 1]);
    at += 2;
  }
  const double phase1 = p[at];
  // Shared chain mixing coordinate 0 with each other coordinate, applied to
  // both vectors so they transform by the same unitary.
  at = chain0_at;
  for (Eigen::Index k = 1; k < dim; ++k) {
    apply_givens(w0, 0, k, p[at], p[at + 1]);
    apply_givens(w1, 0, k, p[at], p[at + 1]);
    at += 2;
  }
  const double phase0 = p[at];
  w0 *= std::polar(1.0, phase0);
  w1 *= std::polar(1.0, phase1);
  return {std::move(w0), std::move(w1)};
}

}  // namespace

RankOnePair parameterize_pair(const BipartiteIndex& idx, const RealParams& params) {
  const int expected = pair_parameter_count(idx);
  if (params.size() != expected) {
    throw std::invalid_argument("parameterize_pair: expected " + std::to_string(expected) +
                                " parameters, got " + std::to_string(params.size()));
  }
  auto [eta0, eta1] = pair_from_params(idx.dim_a, params.data());
  auto [xi0, xi1] = pair_from_params(idx.dim_b, params.data() + 4 * idx.dim_a - 4);
  return RankOnePair::make(std::move(eta0), std::move(eta1), std::move(xi0), std::move(xi1));
}

KappaReport evaluate_report(const BipartiteState& state, const RankOnePair& pair,
                            BoundMethod method) {
  switch (method) {
    case BoundMethod::FirstQubit:
    case BoundMethod::FirstImproved:
    case BoundMethod::MultiBlock:
    case BoundMethod::SecondMethod:
      return kappa_first(state, pair);
    case BoundMethod::SecondQubit:
      return kappa_second(state, pair);
    case BoundMethod::SchmidtKnown:
      break;
  }
  throw std::invalid_argument(
      "evaluate_report: schmidt_known is driven by a pure state's Schmidt data, not a pair");
}

BoundCertificate evaluate_bound(const BipartiteState& state, const RankOnePair& pair,
                                BoundMethod method) {
  const KappaReport r = evaluate_report(state, pair, method);
  BoundCertificate cert;
  switch (method) {
    case BoundMethod::FirstQubit:
      cert = bound_first_qubit(r.kappa);
      break;
    case BoundMethod::FirstImproved:
      cert = bound_first_improved(r.kappa, r.a_diag.value());
      break;
    case BoundMethod::MultiBlock:
      cert = bound_multi_block({r.kappa});
      break;
    case BoundMethod::SecondMethod: {
      const double x = std::max(0.0, r.mean_AdABdB);
      const auto [a, b] = rank_one(pair);
      const double y = operator_norm(a.matrix.adjoint() * a.matrix) *
                       operator_norm(b.matrix.adjoint() * b.matrix);
      cert = bound_second_method(r.kappa, x, y);
      if (cert.applicable) {
        // Comparison values from the weakened quadratic forms.
        const BoundCertificate quad = x > 0.0 ? bound_second_method_quadratic(r.kappa, x, y)
                                              : bound_second_zero_x(r.kappa, y);
        if (quad.applicable) {
          cert.inputs[x > 0.0 ? "quadratic_lower_bound" : "zero_x_lower_bound"] = quad.lower_bound;
        }
      }
      break;
    }
    case BoundMethod::SecondQubit:
      cert = bound_second_qubit(r.kappa, r.alpha.value());
      break;
    case BoundMethod::SchmidtKnown:
      throw std::invalid_argument(
          "evaluate_bound: schmidt_known is driven by a pure state's Schmidt data, not a pair");
  }
  check_certificate_against_dims(cert, state.idx);
  return cert;
}

double bound_objective(const BipartiteState& state, const RankOnePair& pair, BoundMethod method) {
  const KappaReport r = evaluate_report(state, pair, method);
  BoundCertificate cert = evaluate_bound(state, pair, method);
  return cert.applicable ? cert.lower_bound : r.kappa;
}

namespace {

struct RestartOutcome {
  RealParams params;
  double value = 0.0;
};

RestartOutcome pattern_search(const BipartiteState& state, const SearchConfig& config,
                              RealParams start) {
  const auto objective = [&](const RealParams& p) {
    return bound_objective(state, parameterize_pair(state.idx, p), config.method);
  };
  RealParams x = std::move(start);
  double fx = objective(x);
  double step = config.step_init;
  for (int iter = 0; iter < config.max_iters && step >= config.step_min; ++iter) {
    bool improved = false;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      for (const double sign : {1.0, -1.0}) {
        RealParams y = x;
        y(i) += sign * step;
        const double fy = objective(y);
        if (fy > fx) {
          x = std::move(y);
          fx = fy;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return RestartOutcome{std::move(x), fx};
}

}  // namespace

SearchResult optimize(const BipartiteState& state, const SearchConfig& config) {
  if (config.restarts < 1) throw std::invalid_argument("optimize: restarts must be >= 1");
  if (config.method == BoundMethod::SchmidtKnown) {
    throw std::invalid_argument("optimize: schmidt_known cannot be searched over pairs");
  }
  const int n = pair_parameter_count(state.idx);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
  parallel_for(config.restarts, [&](int r) {
    RealParams start = RealParams::Zero(n);
    if (r > 0) {
      // Restart 0 probes the canonical basis pair; the rest draw their
      // starting point from an independent stream seeded with seed + r.
      std::mt19937_64 rng(config.seed + static_cast<std::uint64_t>(r));
      for (int i = 0; i < n; ++i) {
        const double u = (rng() >> 11) * 0x1.0p-53;
        start(i) = (2.0 * u - 1.0) * std::numbers::pi;
      }
    }
    outcomes[static_cast<std::size_t>(r)] = pattern_search(state, config, std::move(start));
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].value > outcomes[best].value) best = r;
  }

  SearchResult result;
  result.restart_best.reserve(outcomes.size());
  for (const RestartOutcome& o : outcomes) result.restart_best.push_back(o.value);
  result.best_pair = parameterize_pair(state.idx, outcomes[best].params);
  result.best_report = evaluate_report(state, result.best_pair, config.method);
  result.best_certificate = evaluate_bound(state, result.best_pair, config.method);
  const double check = result.best_certificate.applicable ? result.best_certificate.lower_bound
                                                          : result.best_report.kappa;
  if (std::abs(check - outcomes[best].value) > 1e-10) {
    throw std::logic_error("optimize: re-evaluated best objective drifted from the search value");
  }
  return result;
}

std::vector<PairComparisonRow> compare_pairs(
    const BipartiteState& state, const std::vector<std::pair<std::string, RankOnePair>>& pairs,
    BoundMethod method) {
  std::vector<PairComparisonRow> rows;
  rows.reserve(pairs.size());
  for (const auto& [name, pair] : pairs) {
    rows.push_back(PairComparisonRow{name, evaluate_report(state, pair, method),
                                     evaluate_bound(state, pair, method)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const PairComparisonRow& a, const PairComparisonRow& b) {
    return a.certificate.lower_bound > b.certificate.lower_bound;
  });
  return rows;
}

}  // namespace negabound
