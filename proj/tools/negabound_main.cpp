// Command-line front end: state/operator specification files in, negativity
// values, entanglement-condition reports, bound certificates, sweep CSVs and
// verification-suite results out.
//
// Exit codes: 0 success (and, for kappa/bound, "condition violated /
// certificate applicable"), 2 "not applicable" (kappa <= 0 or a bound whose
// hypothesis failed), 1 any parse/validation error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "negabound/dicke.hpp"
#include "negabound/io.hpp"
#include "negabound/search.hpp"
#include "negabound/sweep.hpp"
#include "negabound/verify.hpp"

namespace nb = negabound;
using nb::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotApplicable = 2;

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  try {
    Json j;
    f >> j;
    return j;
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("invalid JSON in '" + path + "': " + std::string(e.what()));
  }
}

/// Writes text to --out when given, otherwise to stdout.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw std::runtime_error("write to '" + out_path + "' failed");
}

std::string render_certificate(const nb::BoundCertificate& cert) {
  std::string s;
  s += "method: " + nb::to_string(cert.method) + "\n";
  s += "applicable: " + std::string(cert.applicable ? "true" : "false") + "\n";
  s += "lower_bound: " + nb::format_sig12(cert.lower_bound) + "\n";
  if (!cert.inputs.empty()) {
    s += "inputs:\n";
    for (const auto& [key, value] : cert.inputs) {
      s += "  " + key + " = " + nb::format_sig12(value) + "\n";
    }
  }
  if (!cert.notes.empty()) s += "notes: " + cert.notes + "\n";
  return s;
}

std::string render_report(const nb::KappaReport& report) {
  std::string s;
  s += "condition: " + nb::to_string(report.condition) + "\n";
  s += "kappa: " + nb::format_sig12(report.kappa) + "\n";
  s += "mean_op: " + nb::format_sig12(report.mean_op.real()) + " + " +
       nb::format_sig12(report.mean_op.imag()) + "i\n";
  if (report.condition == nb::Condition::First) {
    s += "mean_AdABdB: " + nb::format_sig12(report.mean_AdABdB) + "\n";
    if (report.a_diag) s += "a_diag: " + nb::format_sig12(*report.a_diag) + "\n";
  } else {
    s += "mean_AdA: " + nb::format_sig12(report.mean_AdA) + "\n";
    s += "mean_BdB: " + nb::format_sig12(report.mean_BdB) + "\n";
    if (report.alpha) s += "alpha: " + nb::format_sig12(*report.alpha) + "\n";
  }
  return s;
}

Json vector_to_json(const nb::Vector& v) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v(i).real());
    im.push_back(v(i).imag());
  }
  return Json{{"re", re}, {"im", im}};
}

Json pair_to_json(const nb::RankOnePair& pair) {
  return Json{{"eta0", vector_to_json(pair.eta0)},
              {"eta1", vector_to_json(pair.eta1)},
              {"xi0", vector_to_json(pair.xi0)},
              {"xi1", vector_to_json(pair.xi1)}};
}

struct OpsInput {
  std::string path;     // --ops FILE
  bool auto_search = false;
};

nb::OperatorResolution resolve_ops_file(const std::string& path, const nb::BipartiteIndex& idx) {
  return nb::resolve_operator_spec(load_json(path), idx);
}

const nb::OperatorChoice& single_choice(const nb::OperatorResolution& ops) {
  if (ops.block_list || ops.choices.size() != 1) {
    throw std::invalid_argument("this command needs a single operator pair, not a block list");
  }
  return ops.choices.front();
}
// The returned reference points into `ops`; never bind a temporary resolution.
const nb::OperatorChoice& single_choice(nb::OperatorResolution&&) = delete;

// ---------------------------------------------------------------------------

int cmd_neg(const std::string& state_path, bool json, const std::string& out) {
  const nb::ResolvedState resolved = nb::resolve_state_spec(load_json(state_path));
  const double neg = nb::negativity_exact(resolved.state);
  if (json) {
    Json j{{"negativity", neg}, {"state", resolved.provenance}};
    emit(j.dump(2) + "\n", out);
  } else {
    emit(nb::format_sig12(neg) + "\n", out);
  }
  return kExitOk;
}

int cmd_kappa(const std::string& state_path, const std::string& ops_path,
              const std::string& condition, bool json, const std::string& out) {
  const nb::ResolvedState resolved = nb::resolve_state_spec(load_json(state_path));
  const nb::OperatorResolution ops = resolve_ops_file(ops_path, resolved.state.idx);
  const nb::OperatorChoice& choice = single_choice(ops);

  nb::KappaReport report;
  if (condition == "first") {
    report = choice.pair ? nb::kappa_first(resolved.state, *choice.pair)
                         : nb::kappa_first(resolved.state, choice.a, choice.b);
  } else if (condition == "second") {
    report = choice.pair ? nb::kappa_second(resolved.state, *choice.pair)
                         : nb::kappa_second(resolved.state, choice.a, choice.b);
  } else {
    throw std::invalid_argument("--condition must be 'first' or 'second', got '" + condition +
                                "'");
  }

  if (json) {
    Json j = nb::kappa_report_to_json(report);
    j["state"] = resolved.provenance;
    j["operators"] = choice.name;
    emit(j.dump(2) + "\n", out);
  } else {
    emit("operators: " + choice.name + "\n" + render_report(report), out);
  }
  return report.kappa > 0.0 ? kExitOk : kExitNotApplicable;
}

/// Certificate for general (possibly non-rank-one) operators under the
/// methods that support them; rank-one pairs go through the library path so
/// certificates match the optimizer's.
nb::BoundCertificate bound_from_choice(const nb::BipartiteState& state,
                                       const nb::OperatorChoice& choice, nb::BoundMethod method,
                                       bool assume_negative_branch) {
  using nb::BoundMethod;
  if (choice.pair && method != BoundMethod::SecondQubit &&
      method != BoundMethod::SchmidtKnown) {
    return nb::evaluate_bound(state, *choice.pair, method);
  }
  switch (method) {
    case BoundMethod::FirstQubit:
      return nb::bound_first_qubit(nb::kappa_first(state, choice.a, choice.b).kappa);
    case BoundMethod::MultiBlock:
      return nb::bound_multi_block({nb::kappa_first(state, choice.a, choice.b).kappa});
    case BoundMethod::SecondMethod: {
      const nb::KappaReport r = nb::kappa_first(state, choice.a, choice.b);
      const double x = std::max(0.0, r.mean_AdABdB);
      const double y = nb::operator_norm(choice.a.matrix.adjoint() * choice.a.matrix) *
                       nb::operator_norm(choice.b.matrix.adjoint() * choice.b.matrix);
      nb::BoundCertificate cert = nb::bound_second_method(r.kappa, x, y);
      if (cert.applicable) {
        const nb::BoundCertificate quad = x > 0.0 ? nb::bound_second_method_quadratic(r.kappa, x, y)
                                                  : nb::bound_second_zero_x(r.kappa, y);
        if (quad.applicable) {
          cert.inputs[x > 0.0 ? "quadratic_lower_bound" : "zero_x_lower_bound"] = quad.lower_bound;
        }
      }
      return cert;
    }
    case BoundMethod::FirstImproved:
      if (!choice.pair) {
        throw std::invalid_argument(
            "first_improved needs a rank-one pair: the diagonal weight is defined by its basis "
            "vectors");
      }
      break;
    case BoundMethod::SecondQubit: {
      if (!choice.pair) {
        throw std::invalid_argument(
            "second_qubit needs a rank-one pair: alpha is defined by its basis vectors");
      }
      const nb::KappaReport r = nb::kappa_second(state, *choice.pair);
      return nb::bound_second_qubit(r.kappa, r.alpha.value(), assume_negative_branch);
    }
    case BoundMethod::SchmidtKnown:
      return nb::bound_schmidt_known(state, choice.a, choice.b);
  }
  throw std::logic_error("bound_from_choice: unhandled method");
}

int cmd_bound(const std::string& state_path, const OpsInput& ops_input,
              const std::string& method_name, int schmidt_k, bool assume_negative_branch,
              const nb::SearchConfig& search_config, bool json, const std::string& out) {
  const nb::ResolvedState resolved = nb::resolve_state_spec(load_json(state_path));
  const nb::BipartiteState& state = resolved.state;
  const nb::BoundMethod method = nb::bound_method_from_string(method_name);

  nb::BoundCertificate cert;
  Json extra = Json::object();

  if (ops_input.auto_search) {
    nb::SearchConfig config = search_config;
    config.method = method;
    const nb::SearchResult result = nb::optimize(state, config);
    cert = result.best_certificate;
    extra["pair"] = pair_to_json(result.best_pair);
    extra["restart_best"] = result.restart_best;
  } else if (schmidt_k > 0) {
    if (method != nb::BoundMethod::SchmidtKnown) {
      throw std::invalid_argument("--k applies to --method schmidt_known only");
    }
    if (!resolved.pure) {
      throw std::invalid_argument(
          "--k partitions the Schmidt decomposition, which needs a pure state spec");
    }
    const nb::SchmidtData sd = nb::schmidt(*resolved.pure);
    const auto [a, b] = nb::schmidt_partition_operators(sd, schmidt_k);
    cert = nb::bound_schmidt_known(state, a, b);
    cert.inputs["k"] = schmidt_k;
  } else {
    if (ops_input.path.empty()) {
      throw std::invalid_argument("provide --ops FILE, --auto-search, or --k");
    }
    const nb::OperatorResolution ops = resolve_ops_file(ops_input.path, state.idx);
    if (method == nb::BoundMethod::MultiBlock && ops.choices.size() > 1) {
      // Orthogonality of the lifted blocks is what makes the sum valid.
      std::vector<nb::ProjectorPair> projectors;
      std::vector<double> kappas;
      for (const nb::OperatorChoice& c : ops.choices) {
        if (!c.pair) throw std::invalid_argument("multi_block blocks must be rank-one pairs");
        projectors.push_back(nb::projector_from_pair(*c.pair));
        kappas.push_back(nb::kappa_first(state, *c.pair).kappa);
      }
      for (std::size_t i = 0; i < projectors.size(); ++i) {
        for (std::size_t j = i + 1; j < projectors.size(); ++j) {
          const double overlap =
              nb::operator_norm(projectors[i].p_a * projectors[j].p_a) *
              nb::operator_norm(projectors[i].p_b * projectors[j].p_b);
          if (overlap > nb::kHermTol) {
            throw std::invalid_argument("multi_block blocks " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are not orthogonal (overlap " +
                                        std::to_string(overlap) + ")");
          }
        }
      }
      cert = nb::bound_multi_block(kappas);
    } else {
      cert = bound_from_choice(state, single_choice(ops), method, assume_negative_branch);
    }
  }

  // Display convention for the second bounding route: when the cross term
  // vanishes the closed-form quadratic value is shown as the headline bound
  // and the bisection value is retained in the inputs for comparison.
  if (method == nb::BoundMethod::SecondMethod && cert.applicable) {
    const auto x_it = cert.inputs.find("x");
    const auto zx_it = cert.inputs.find("zero_x_lower_bound");
    if (x_it != cert.inputs.end() && x_it->second <= 1e-12 && zx_it != cert.inputs.end()) {
      cert.inputs["bisection_lower_bound"] = cert.lower_bound;
      cert.lower_bound = zx_it->second;
      cert.inputs.erase("zero_x_lower_bound");
      cert.notes = "closed-form quadratic at x = 0; bisection value kept in inputs";
    }
  }
  nb::check_certificate_against_dims(cert, state.idx);

  if (json) {
    Json j = nb::certificate_to_json(cert);
    j["state"] = resolved.provenance;
    for (const auto& [key, value] : extra.items()) j[key] = value;
    emit(j.dump(2) + "\n", out);
  } else {
    emit(render_certificate(cert), out);
  }
  return cert.applicable ? kExitOk : kExitNotApplicable;
}

int cmd_sweep(const std::string& spec_path, const std::string& out) {
  const nb::SweepSpec spec = nb::SweepSpec::from_json(load_json(spec_path));
  const nb::SweepTable table = nb::run_sweep(spec);
  const std::string csv = nb::to_csv(table);
  emit(csv, out);
  if (!out.empty()) {
    std::cout << "wrote " << table.rows.size() << " rows x " << table.header.size()
              << " columns to " << out << "\n";
  }
  return kExitOk;
}

int cmd_search(const std::string& state_path, const nb::SearchConfig& config, bool json,
               const std::string& out) {
  const nb::ResolvedState resolved = nb::resolve_state_spec(load_json(state_path));
  const nb::SearchResult result = nb::optimize(resolved.state, config);

  if (json) {
    Json j{{"certificate", nb::certificate_to_json(result.best_certificate)},
           {"report", nb::kappa_report_to_json(result.best_report)},
           {"pair", pair_to_json(result.best_pair)},
           {"restart_best", result.restart_best},
           {"state", resolved.provenance}};
    emit(j.dump(2) + "\n", out);
  } else {
    std::string s;
    s += "restarts: " + std::to_string(result.restart_best.size()) + "\n";
    s += "restart_best:";
    for (double v : result.restart_best) s += " " + nb::format_sig12(v);
    s += "\n--- best certificate ---\n" + render_certificate(result.best_certificate);
    s += "--- best kappa report ---\n" + render_report(result.best_report);
    emit(s, out);
  }
  return result.best_certificate.applicable ? kExitOk : kExitNotApplicable;
}

int cmd_dicke_rabi(double j, int n_max, double omega, double g, double t_max, int points,
                   const std::string& out) {
  const nb::DickeModel model = nb::DickeModel::make(j, n_max, omega, g);
  if (points < 2) throw std::invalid_argument("--points must be >= 2");
  if (!(t_max > 0.0)) throw std::invalid_argument("--t-max must be > 0");
  const nb::PureState initial = nb::spin_field_basis_state(model, 1, 0);
  // One excitation exchanged with the mode: population returns as
  // cos^2(sqrt(2j) g t).
  const double rate = std::sqrt(2.0 * model.j) * model.g;
  std::string csv = "t,excited_population,closed_form\n";
  for (int k = 0; k < points; ++k) {
    const double t = t_max * k / static_cast<double>(points - 1);
    const nb::PureState evolved = nb::evolve(model, initial, t);
    const double pop = std::norm(evolved.amplitudes(1 * model.field_dim() + 0));
    const double c = std::cos(rate * t);
    csv += nb::format_sig12(t) + "," + nb::format_sig12(pop) + "," + nb::format_sig12(c * c) +
           "\n";
  }
  emit(csv, out);
  return kExitOk;
}

Json schmidt_report_to_json(const nb::SchmidtVectorReport& report) {
  Json entries = Json::array();
  for (const nb::SchmidtVectorEntry& e : report.entries) {
    entries.push_back(Json{{"s", e.s},
                           {"spin_level", e.spin_level},
                           {"boson_level", e.boson_level},
                           {"status", nb::to_string(e.status)},
                           {"overlap_a", e.overlap_a},
                           {"overlap_b", e.overlap_b},
                           {"coefficient", e.coefficient}});
  }
  Json coeffs = Json::array();
  for (Eigen::Index i = 0; i < report.schmidt_data.coefficients.size(); ++i) {
    coeffs.push_back(report.schmidt_data.coefficients(i));
  }
  return Json{{"time", report.time},
              {"confirmed", report.confirmed_count()},
              {"entries", entries},
              {"schmidt_coefficients", coeffs}};
}

std::string render_schmidt_report(const nb::SchmidtVectorReport& report) {
  std::string s = "time: " + nb::format_sig12(report.time) + "\n";
  s += "schmidt_coefficients:";
  for (Eigen::Index i = 0; i < report.schmidt_data.coefficients.size(); ++i) {
    s += " " + nb::format_sig12(report.schmidt_data.coefficients(i));
  }
  s += "\n";
  for (const nb::SchmidtVectorEntry& e : report.entries) {
    s += "s=" + std::to_string(e.s) + " |l=" + std::to_string(e.spin_level) +
         ">|n=" + std::to_string(e.boson_level) + ">: " + nb::to_string(e.status) +
         " (overlap_a " + nb::format_sig12(e.overlap_a) + ", overlap_b " +
         nb::format_sig12(e.overlap_b) + ", coefficient " + nb::format_sig12(e.coefficient) +
         ")\n";
  }
  s += "confirmed: " + std::to_string(report.confirmed_count()) + " of " +
       std::to_string(report.entries.size()) + "\n";
  return s;
}

int cmd_dicke_schmidt(double j, int n_max, double omega, double g, int l1, int l2, double c0_re,
                      double c0_im, double c1_re, double c1_im, double t, bool json,
                      const std::string& out) {
  const nb::DickeModel model = nb::DickeModel::make(j, n_max, omega, g);
  const nb::SchmidtVectorReport report = nb::schmidt_vector_check(
      model, nb::Complex(c0_re, c0_im), nb::Complex(c1_re, c1_im), l1, l2, t);
  if (json) {
    emit(schmidt_report_to_json(report).dump(2) + "\n", out);
  } else {
    emit(render_schmidt_report(report), out);
  }
  return kExitOk;
}

int cmd_dicke_bound(double j, int n_max, double omega, double g, int l1, int l2, double c0_re,
                    double c0_im, double c1_re, double c1_im, double t, int k, bool json,
                    const std::string& out) {
  const nb::DickeModel model = nb::DickeModel::make(j, n_max, omega, g);
  const nb::DickeBoundResult result = nb::dicke_schmidt_bound(
      model, nb::Complex(c0_re, c0_im), nb::Complex(c1_re, c1_im), l1, l2, t, k);
  if (json) {
    Json out_json{{"certificate", nb::certificate_to_json(result.certificate)},
                  {"k_used", result.k_used},
                  {"check", schmidt_report_to_json(result.check)},
                  {"negativity_exact", nb::negativity_exact(result.check.evolved)}};
    emit(out_json.dump(2) + "\n", out);
  } else {
    std::string s = render_schmidt_report(result.check);
    s += "--- certificate (k = " + std::to_string(result.k_used) + ") ---\n";
    s += render_certificate(result.certificate);
    s += "negativity_exact: " + nb::format_sig12(nb::negativity_exact(result.check.evolved)) +
         "\n";
    emit(s, out);
  }
  return result.certificate.applicable ? kExitOk : kExitNotApplicable;
}

int cmd_verify(const std::string& suite, int states, int pairs, std::uint64_t seed,
               bool have_counts) {
  std::vector<nb::SuiteResult> results;
  if (suite == "all") {
    if (have_counts) {
      throw std::invalid_argument("--states/--pairs/--seed need a specific --suite");
    }
    results = nb::verify_all();
  } else if (have_counts && suite == "soundness") {
    results.push_back(nb::verify_soundness(states, pairs, seed));
  } else if (have_counts && suite == "separability") {
    results.push_back(nb::verify_separability(states, pairs, seed));
  } else if (have_counts && suite == "pinching") {
    results.push_back(nb::verify_pinching(states, seed));
  } else if (have_counts) {
    throw std::invalid_argument("--states/--pairs/--seed apply to the randomized suites only");
  } else {
    results.push_back(nb::run_suite(suite));
  }

  bool all_passed = true;
  for (const nb::SuiteResult& r : results) {
    all_passed = all_passed && r.passed();
    std::cout << "suite " << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (checks "
              << r.checks << ", failures " << r.failures << ", " << nb::format_sig12(r.elapsed_seconds)
              << " s)\n";
    for (const std::string& detail : r.failure_details) {
      std::cout << "  - " << detail << "\n";
    }
    if (r.failures > static_cast<int>(r.failure_details.size())) {
      std::cout << "  - ... and " << r.failures - static_cast<int>(r.failure_details.size())
                << " more\n";
    }
  }
  return all_passed ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negativity bounds from entanglement conditions"};
  app.require_subcommand(1);

  std::string state_path, ops_path, spec_path, out_path, condition = "first";
  std::string method_name = "first_qubit", suite = "all";
  bool json = false, auto_search = false, assume_negative_branch = false;
  int schmidt_k = 0;
  nb::SearchConfig search_config;
  int verify_states = 0, verify_pairs = 0;
  std::uint64_t verify_seed = 0;

  auto* neg = app.add_subcommand("neg", "exact negativity of a state spec");
  neg->add_option("--state", state_path, "state spec JSON file")->required();
  neg->add_flag("--json", json, "JSON output");
  neg->add_option("--out", out_path, "write output to this file");

  auto* kappa = app.add_subcommand("kappa", "entanglement-condition value for one operator pair");
  kappa->add_option("--state", state_path, "state spec JSON file")->required();
  kappa->add_option("--ops", ops_path, "operator spec JSON file")->required();
  kappa->add_option("--condition", condition, "first|second (default first)");
  kappa->add_flag("--json", json, "JSON output");
  kappa->add_option("--out", out_path, "write output to this file");

  auto* bound = app.add_subcommand("bound", "negativity lower-bound certificate");
  bound->add_option("--state", state_path, "state spec JSON file")->required();
  bound->add_option("--ops", ops_path, "operator spec JSON file");
  bound->add_option("--method", method_name,
                    "first_qubit|first_improved|multi_block|second_method|second_qubit|"
                    "schmidt_known");
  bound->add_option("--k", schmidt_k, "Schmidt partition size (schmidt_known on pure states)");
  bound->add_flag("--assume-negative-branch", assume_negative_branch,
                  "admit kappa = 0 for second_qubit");
  bound->add_flag("--auto-search", auto_search, "optimize the operator pair by pattern search");
  bound->add_option("--restarts", search_config.restarts, "search restarts (with --auto-search)");
  bound->add_option("--seed", search_config.seed, "search seed (with --auto-search)");
  bound->add_flag("--json", json, "JSON output");
  bound->add_option("--out", out_path, "write output to this file");

  auto* sweep = app.add_subcommand("sweep", "family sweep to CSV");
  sweep->add_option("--spec", spec_path, "sweep spec JSON file")->required();
  sweep->add_option("--out", out_path, "output CSV path (default: stdout)");

  auto* search = app.add_subcommand("search", "pattern search over operator pairs");
  search->add_option("--state", state_path, "state spec JSON file")->required();
  search->add_option("--method", method_name, "bound method to optimize");
  search->add_option("--restarts", search_config.restarts, "number of restarts");
  search->add_option("--iters", search_config.max_iters, "coordinate sweeps per restart");
  search->add_option("--step-init", search_config.step_init, "initial step size");
  search->add_option("--step-min", search_config.step_min, "stop when the step falls below this");
  search->add_option("--seed", search_config.seed, "seed for the random restarts");
  search->add_flag("--json", json, "JSON output");
  search->add_option("--out", out_path, "write output to this file");

  auto* dicke = app.add_subcommand("dicke", "spin-boson model reports");
  dicke->require_subcommand(1);
  double dj = 0.5, domega = 1.0, dg = 0.2, dt = 0.0, t_max = 50.0;
  double c0_re = 1.0 / std::numbers::sqrt2, c0_im = 0.0;
  double c1_re = 1.0 / std::numbers::sqrt2, c1_im = 0.0;
  int dn_max = 4, l1 = 0, l2 = 4, points = 201, dicke_k = 0;

  auto* rabi = dicke->add_subcommand("rabi", "one-excitation oscillation CSV");
  rabi->add_option("--j", dj, "spin size (positive half-integer)");
  rabi->add_option("--n-max", dn_max, "boson cutoff");
  rabi->add_option("--omega", domega, "mode and spin frequency");
  rabi->add_option("--g", dg, "coupling");
  rabi->add_option("--t-max", t_max, "final time");
  rabi->add_option("--points", points, "number of samples");
  rabi->add_option("--out", out_path, "output CSV path (default: stdout)");

  const auto add_schmidt_options = [&](CLI::App* cmd) {
    cmd->add_option("--j", dj, "spin size (positive half-integer)");
    cmd->add_option("--n-max", dn_max, "boson cutoff (must cover l2)");
    cmd->add_option("--omega", domega, "mode and spin frequency");
    cmd->add_option("--g", dg, "coupling");
    cmd->add_option("--l1", l1, "lower spin level");
    cmd->add_option("--l2", l2, "upper spin level");
    cmd->add_option("--c0-re", c0_re, "Re c0");
    cmd->add_option("--c0-im", c0_im, "Im c0");
    cmd->add_option("--c1-re", c1_re, "Re c1");
    cmd->add_option("--c1-im", c1_im, "Im c1");
    cmd->add_option("--t", dt, "evolution time")->required();
    cmd->add_flag("--json", json, "JSON output");
    cmd->add_option("--out", out_path, "write output to this file");
  };
  auto* dschmidt = dicke->add_subcommand("schmidt", "product Schmidt-vector check");
  add_schmidt_options(dschmidt);
  auto* dbound = dicke->add_subcommand("bound", "negativity bound from identified Schmidt vectors");
  add_schmidt_options(dbound);
  dbound->add_option("--k", dicke_k, "partition size (0 scans all)");

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suite,
                     "golden|crossings|four_qubit_grid|soundness|separability|pinching|"
                     "conservation|schmidt_window|formulas|search|all");
  auto* opt_states = verify->add_option("--states", verify_states, "random-state count");
  auto* opt_pairs = verify->add_option("--pairs", verify_pairs, "random-pair count per state");
  auto* opt_seed = verify->add_option("--seed", verify_seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (app.got_subcommand(neg)) return cmd_neg(state_path, json, out_path);
    if (app.got_subcommand(kappa)) {
      return cmd_kappa(state_path, ops_path, condition, json, out_path);
    }
    if (app.got_subcommand(bound)) {
      return cmd_bound(state_path, OpsInput{ops_path, auto_search}, method_name, schmidt_k,
                       assume_negative_branch, search_config, json, out_path);
    }
    if (app.got_subcommand(sweep)) return cmd_sweep(spec_path, out_path);
    if (app.got_subcommand(search)) {
      search_config.method = nb::bound_method_from_string(method_name);
      return cmd_search(state_path, search_config, json, out_path);
    }
    if (app.got_subcommand(dicke)) {
      if (dicke->got_subcommand(rabi)) {
        return cmd_dicke_rabi(dj, dn_max, domega, dg, t_max, points, out_path);
      }
      if (dicke->got_subcommand(dschmidt)) {
        return cmd_dicke_schmidt(dj, dn_max, domega, dg, l1, l2, c0_re, c0_im, c1_re, c1_im, dt,
                                 json, out_path);
      }
      return cmd_dicke_bound(dj, dn_max, domega, dg, l1, l2, c0_re, c0_im, c1_re, c1_im, dt,
                             dicke_k, json, out_path);
    }
    if (app.got_subcommand(verify)) {
      const bool have_counts = opt_states->count() > 0 || opt_pairs->count() > 0 ||
                               opt_seed->count() > 0;
      if (verify_states == 0) verify_states = 1000;
      if (verify_pairs == 0) verify_pairs = 20;
      if (opt_seed->count() == 0) verify_seed = 20260817;
      return cmd_verify(suite, verify_states, verify_pairs, verify_seed, have_counts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::cerr << "error: no subcommand\n";
  return kExitError;
}
