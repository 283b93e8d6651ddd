// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion re-states its checks directly or drives the matching
// verification suite, and enforces its own wall-clock budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "negabound/bounds.hpp"
#include "negabound/verify.hpp"

namespace nb = negabound;

namespace {

struct Criterion {
  int number;
  std::string label;
  double time_limit_seconds;
  std::function<void(std::vector<std::string>&)> run;  // appends failure messages
};

void expect(std::vector<std::string>& failures, bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

void expect_suite(std::vector<std::string>& failures, const nb::SuiteResult& result) {
  if (!result.passed()) {
    failures.push_back("suite " + result.name + ": " + std::to_string(result.failures) +
                       " of " + std::to_string(result.checks) + " checks failed");
    for (const std::string& d : result.failure_details) failures.push_back("  " + d);
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "golden values", 1.0, [](std::vector<std::string>& failures) {
    const double first = nb::bound_first_qubit(0.25).lower_bound;
    expect(failures, std::abs(first - 0.2071) < 1e-3,
           "first-condition qubit bound at kappa=1/4: got " + std::to_string(first));

    // Pipeline to the closed-form quadratic value: the half-half two-qubit
    // state with the lowering pair gives kappa = 1/4 with vanishing cross
    // term, and the x = 0 closed form evaluates to sqrt(5) - 2.
    const nb::KappaReport r =
        nb::kappa_first(nb::make_bell_like(0.5).density(), nb::sigma_minus_pair());
    expect(failures, std::abs(r.kappa - 0.25) < 1e-12,
           "lowering-pair kappa on the half-half state: got " + std::to_string(r.kappa));
    expect(failures, std::abs(r.mean_AdABdB) < 1e-12, "cross term expected to vanish");
    const double quad = nb::bound_second_zero_x(r.kappa, 1.0).lower_bound;
    expect(failures, std::abs(quad - (std::sqrt(5.0) - 2.0)) < 1e-3,
           "closed-form quadratic bound: got " + std::to_string(quad));

    for (int n : {2, 4, 6}) {
      const nb::PureState psi = nb::make_max_entangled(n);
      const double neg = nb::negativity_exact(psi);
      const double want = (n - 1) / 2.0;
      expect(failures, std::abs(neg - want) < 1e-9,
             "negativity of the maximally entangled state n=" + std::to_string(n));
      const nb::SchmidtData sd = nb::schmidt(psi);
      const auto [a, b] = nb::schmidt_partition_operators(sd, n / 2);
      const nb::BoundCertificate cert = nb::bound_schmidt_known(psi.density(), a, b);
      expect(failures, cert.applicable && std::abs(cert.lower_bound - want) < 1e-9,
             "Schmidt-knowledge bound must equal the negativity at n=" + std::to_string(n));
    }
  }});

  criteria.push_back({2, "kappa zero crossings", 1.0, [](std::vector<std::string>& failures) {
    expect_suite(failures, nb::verify_crossings());
  }});

  criteria.push_back({3, "four-qubit sweep dominance", 5.0, [](std::vector<std::string>& failures) {
    expect_suite(failures, nb::verify_four_qubit_grid());
  }});

  criteria.push_back({4, "soundness, 1000 states x 20 pairs", 60.0,
                      [](std::vector<std::string>& failures) {
    expect_suite(failures, nb::verify_soundness(1000, 20, 20260817));
  }});

  criteria.push_back({5, "separability, 500 products x 50 pairs", 30.0,
                      [](std::vector<std::string>& failures) {
    expect_suite(failures, nb::verify_separability(500, 50, 7));
  }});

  criteria.push_back({6, "pinching, 200 states", 30.0, [](std::vector<std::string>& failures) {
    expect_suite(failures, nb::verify_pinching(200, 11));
  }});

  criteria.push_back({7, "spin-boson conservation and Schmidt window", 30.0,
                      [](std::vector<std::string>& failures) {
    expect_suite(failures, nb::verify_conservation());
    expect_suite(failures, nb::verify_schmidt_window());
  }});

  criteria.push_back({8, "formula cross-checks", 5.0, [](std::vector<std::string>& failures) {
    expect_suite(failures, nb::verify_formulas());
  }});

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::vector<std::string> failures;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > c.time_limit_seconds) {
      failures.push_back("time limit exceeded: " + std::to_string(elapsed) + " s > " +
                         std::to_string(c.time_limit_seconds) + " s");
    }
    const bool ok = failures.empty();
    failed += ok ? 0 : 1;
    std::printf("criterion %d (%s): %s (%.2f s)\n", c.number, c.label.c_str(),
                ok ? "PASS" : "FAIL", elapsed);
    for (const std::string& f : failures) std::printf("    %s\n", f.c_str());
  }
  if (failed > 0) {
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
