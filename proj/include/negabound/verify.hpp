#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace negabound {

/// Outcome of one property suite: counts plus the first few failure details.
struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> failure_details;  // capped; see kMaxRecordedFailures
  double elapsed_seconds = 0.0;

  bool passed() const { return failures == 0 && checks > 0; }
};

inline constexpr int kMaxRecordedFailures = 16;

/// Frozen reference values: first-qubit bound at kappa = 1/4, the x = 0
/// quadratic second bound on the Bell pair, bisection and improved-bound
/// spot values, maximally entangled negativities for n in {2, 4, 6} with the
/// Schmidt-partition bound, the depolarized-pair negativity, and the
/// four-qubit family value at weights (0.4, 0.1, 0.4, 0.1).
SuiteResult verify_golden();

/// Sign changes of the x-basis kappa on the bell_like family: grid scan plus
/// bisection to 1e-6, compared against 0.057109 and 0.942891 within 1e-5.
SuiteResult verify_crossings();

/// Symmetric four-qubit sweep (201 points): coarse kappa = 1/4 within 1e-10,
/// coarse bound >= combined fine-block bound everywhere, and the closed-form
/// negativity (1 + 8 sqrt(l00 l11)) / 2 against the eigendecomposition.
SuiteResult verify_four_qubit_grid();

/// Every applicable certificate from every bound method stays below the
/// exact negativity (+1e-9) on seeded random two-qubit mixed states x random
/// rank-one pairs. Also checks the quadratic weakening never exceeds the
/// bisection value.
SuiteResult verify_soundness(int n_states = 1000, int n_pairs = 20,
                             std::uint64_t seed = 20260817);

/// Separable (product and mixed-product) states never violate either
/// condition: kappa <= 1e-10 for all random pairs, dims in {2,3} x {2,3}.
SuiteResult verify_separability(int n_states = 500, int n_pairs = 50, std::uint64_t seed = 7);

/// Pinching cannot increase the trace norm: random (4,4) states, random
/// orthogonal two-block splittings, sum of block norms <= full norm + 1e-9.
SuiteResult verify_pinching(int n_states = 200, std::uint64_t seed = 11);

/// Spin-boson checks: the full Hamiltonian commutes with the excitation
/// operator, sector evolution matches the full-space propagator, excitation
/// expectation is conserved over t in [0, 50/g], and the one-excitation
/// population follows cos^2(gt).
SuiteResult verify_conservation();

/// Predicted product Schmidt vectors of the two-sector superposition
/// (j = 4, l1 = 0, l2 = 4): all of s in {1, 2, 3} confirmed at >= 90% of
/// sampled generic times; single-sector states have every product vector
/// confirmed and their partition bound stays below the exact negativity.
SuiteResult verify_schmidt_window();

/// Closed-form grids (101 points, 1e-10): bell_like and noisy kappa
/// formulas, noisy negativity against eigendecomposition, diagonal weights,
/// the four-qubit kappa values, and a sweep-engine CSV cross-check with
/// byte-for-byte determinism.
SuiteResult verify_formulas();

/// Pattern search from the canonical start never falls below the canonical
/// certificate, and repeated runs with the same seed agree exactly.
SuiteResult verify_search(std::uint64_t seed = 5);

/// Names accepted by run_suite, in execution order of verify_all.
std::vector<std::string> suite_names();

/// Runs one suite by name (throws std::invalid_argument for unknown names).
SuiteResult run_suite(const std::string& name);

/// Runs every suite with default parameters.
std::vector<SuiteResult> verify_all();

}  // namespace negabound
