#include "negabound/sweep.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <utility>

#include "negabound/bounds.hpp"
#include "negabound/parallel.hpp"

namespace negabound {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("sweep spec: " + what);
}

struct FamilyInfo {
  BipartiteIndex idx;
  std::vector<std::string> parameters;  // swept-or-fixed parameter names
  bool pure;                            // family states are pure
};

FamilyInfo family_info(const std::string& family) {
  if (family == "bell_like") return {BipartiteIndex{2, 2}, {"lambda0"}, true};
  if (family == "noisy") return {BipartiteIndex{2, 2}, {"lambda0", "p"}, false};
  if (family == "four_qubit_symmetric") return {BipartiteIndex{4, 4}, {"lambda00"}, true};
  fail("unknown family '" + family + "'");
}

/// The family state at one grid point. `pure` is set for pure families.
struct GridState {
  BipartiteState state;
  std::optional<PureState> pure;
};

GridState build_state(const std::string& family, const std::map<std::string, double>& params) {
  GridState out;
  if (family == "bell_like") {
    PureState ps = make_bell_like(params.at("lambda0"));
    out.state = ps.density();
    out.pure = std::move(ps);
  } else if (family == "noisy") {
    out.state = make_noisy(params.at("lambda0"), params.at("p"));
  } else {  // four_qubit_symmetric
    const double l00 = params.at("lambda00");
    if (l00 < 0.0 || l00 > 0.5) {
      throw std::invalid_argument("four_qubit_symmetric: lambda00 must lie in [0, 1/2], got " +
                                  std::to_string(l00));
    }
    const double rest = 0.5 * (1.0 - 2.0 * l00);
    PureState ps = make_four_qubit({l00, rest, l00, rest});
    out.state = ps.density();
    out.pure = std::move(ps);
  }
  return out;
}

Json default_operators(const std::string& family, const std::string& quantity) {
  const bool four = family == "four_qubit_symmetric";
  if (quantity == "kappa_second" || quantity == "bound_second_qubit") {
    if (four) fail("quantity '" + quantity + "' has no default operators on this family; set 'operators'");
    return Json{{"kind", "pauli_raising"}};
  }
  if (quantity == "bound_multi_block") {
    if (four) return Json{{"kind", "four_qubit_fine_blocks"}};
    return Json{{"kind", "block_list"}, {"pairs", Json::array({Json{{"kind", "pauli_lowering"}}})}};
  }
  // First-condition quantities.
  return four ? Json{{"kind", "four_qubit_coarse"}} : Json{{"kind", "pauli_lowering"}};
}

bool needs_operators(const std::string& quantity) {
  return quantity != "negativity_exact" && quantity != "negativity_pure";
}

bool known_quantity(const std::string& quantity) {
  static const char* const names[] = {
      "negativity_exact", "negativity_pure",     "kappa_first",
      "kappa_second",     "bound_first_qubit",   "bound_first_improved",
      "bound_multi_block", "bound_second_method", "bound_second_zero_x",
      "bound_second_qubit"};
  for (const char* name : names) {
    if (quantity == name) return true;
  }
  return false;
}

/// Lifted projectors of distinct blocks must be orthogonal for the additive
/// multi-block bound to apply.
void check_blocks_orthogonal(const std::vector<OperatorChoice>& choices) {
  std::vector<ProjectorPair> projectors;
  projectors.reserve(choices.size());
  for (const OperatorChoice& c : choices) {
    if (!c.pair) fail("bound_multi_block requires rank-one block pairs");
    projectors.push_back(projector_from_pair(*c.pair));
  }
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    for (std::size_t j = i + 1; j < projectors.size(); ++j) {
      const double overlap = operator_norm(projectors[i].p_a * projectors[j].p_a) *
                             operator_norm(projectors[i].p_b * projectors[j].p_b);
      if (overlap > kHermTol) {
        fail("bound_multi_block blocks " + std::to_string(i) + " and " + std::to_string(j) +
             " are not orthogonal (overlap " + std::to_string(overlap) + ")");
      }
    }
  }
}

KappaReport first_report(const BipartiteState& state, const OperatorChoice& c) {
  return c.pair ? kappa_first(state, *c.pair) : kappa_first(state, c.a, c.b);
}

std::optional<double> bound_cell(const BoundCertificate& cert, const BipartiteIndex& idx) {
  check_certificate_against_dims(cert, idx);
  if (!cert.applicable) return std::nullopt;
  return cert.lower_bound;
}

std::optional<double> evaluate_quantity(const std::string& quantity, const GridState& gs,
                                        const OperatorResolution& ops) {
  const BipartiteState& state = gs.state;
  if (quantity == "negativity_exact") return negativity_exact(state);
  if (quantity == "negativity_pure") {
    if (!gs.pure) fail("negativity_pure requires a pure family");
    return negativity_pure(schmidt(*gs.pure));
  }

  if (quantity == "bound_multi_block") {
    std::vector<double> kappas;
    kappas.reserve(ops.choices.size());
    for (const OperatorChoice& c : ops.choices) kappas.push_back(first_report(state, c).kappa);
    return bound_cell(bound_multi_block(kappas), state.idx);
  }

  if (ops.choices.size() != 1) {
    fail("quantity '" + quantity + "' takes a single operator pair, not a block list");
  }
  const OperatorChoice& c = ops.choices.front();

  if (quantity == "kappa_first") return first_report(state, c).kappa;
  if (quantity == "kappa_second") {
    return (c.pair ? kappa_second(state, *c.pair) : kappa_second(state, c.a, c.b)).kappa;
  }
  if (quantity == "bound_first_qubit") {
    return bound_cell(bound_first_qubit(first_report(state, c).kappa), state.idx);
  }
  if (quantity == "bound_first_improved") {
    if (!c.pair) fail("bound_first_improved requires a rank-one pair (diagonal weight)");
    const KappaReport r = first_report(state, c);
    return bound_cell(bound_first_improved(r.kappa, r.a_diag.value()), state.idx);
  }
  if (quantity == "bound_second_method" || quantity == "bound_second_zero_x") {
    const KappaReport r = first_report(state, c);
    const double x = std::max(0.0, r.mean_AdABdB);
    const double y = operator_norm(c.a.matrix.adjoint() * c.a.matrix) *
                     operator_norm(c.b.matrix.adjoint() * c.b.matrix);
    if (quantity == "bound_second_zero_x") {
      if (std::abs(r.mean_AdABdB) > 1e-12) return std::nullopt;  // outside the x = 0 regime
      return bound_cell(bound_second_zero_x(r.kappa, y), state.idx);
    }
    return bound_cell(bound_second_method(r.kappa, x, y), state.idx);
  }
  if (quantity == "bound_second_qubit") {
    if (!c.pair) fail("bound_second_qubit requires a rank-one pair (diagonal weight)");
    const KappaReport r = kappa_second(state, *c.pair);
    return bound_cell(bound_second_qubit(r.kappa, r.alpha.value()), state.idx);
  }
  fail("unknown quantity '" + quantity + "'");
}

}  // namespace

SweepSpec SweepSpec::from_json(const Json& spec) {
  if (!spec.is_object()) fail("expected a JSON object");
  SweepSpec out;

  if (auto it = spec.find("family"); it != spec.end() && it->is_string()) {
    out.family = it->get<std::string>();
  } else {
    fail("missing string field 'family'");
  }
  const FamilyInfo info = family_info(out.family);

  if (auto it = spec.find("variable"); it != spec.end() && it->is_string()) {
    out.variable = it->get<std::string>();
  } else {
    fail("missing string field 'variable'");
  }
  bool known = false;
  for (const std::string& p : info.parameters) known = known || p == out.variable;
  if (!known) fail("family '" + out.family + "' has no parameter '" + out.variable + "'");

  if (auto it = spec.find("range");
      it != spec.end() && it->is_array() && it->size() == 2 && (*it)[0].is_number() && (*it)[1].is_number()) {
    out.lo = (*it)[0].get<double>();
    out.hi = (*it)[1].get<double>();
  } else {
    fail("missing field 'range' = [lo, hi]");
  }
  if (!(out.lo < out.hi)) fail("'range' must satisfy lo < hi");

  if (auto it = spec.find("points"); it != spec.end()) {
    if (!it->is_number_integer() || it->get<int>() < 2) fail("'points' must be an integer >= 2");
    out.points = it->get<int>();
  }

  if (auto it = spec.find("fixed"); it != spec.end()) {
    if (!it->is_object()) fail("'fixed' must be an object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_number()) fail("'fixed' values must be numbers");
      out.fixed[key] = value.get<double>();
    }
  }
  for (const std::string& p : info.parameters) {
    if (p != out.variable && out.fixed.find(p) == out.fixed.end()) {
      fail("parameter '" + p + "' must be set in 'fixed' when sweeping '" + out.variable + "'");
    }
  }
  for (const auto& [key, value] : out.fixed) {
    (void)value;
    bool param = false;
    for (const std::string& p : info.parameters) param = param || p == key;
    if (!param) fail("'fixed' names unknown parameter '" + key + "'");
    if (key == out.variable) fail("swept variable '" + key + "' cannot also be fixed");
  }

  const auto qit = spec.find("quantities");
  if (qit == spec.end() || !qit->is_array() || qit->empty()) {
    fail("missing nonempty array field 'quantities'");
  }
  for (const Json& q : *qit) {
    SweepColumn col;
    if (q.is_string()) {
      col.quantity = q.get<std::string>();
      col.column = col.quantity;
    } else if (q.is_object()) {
      const auto quantity = q.find("quantity");
      if (quantity == q.end() || !quantity->is_string()) {
        fail("quantity objects need a string field 'quantity'");
      }
      col.quantity = quantity->get<std::string>();
      if (auto c = q.find("column"); c != q.end() && c->is_string()) {
        col.column = c->get<std::string>();
      } else {
        col.column = col.quantity;
      }
      if (auto o = q.find("operators"); o != q.end()) col.operators = *o;
    } else {
      fail("'quantities' entries must be strings or objects");
    }
    if (!known_quantity(col.quantity)) fail("unknown quantity '" + col.quantity + "'");
    out.columns.push_back(std::move(col));
  }
  return out;
}

SweepTable run_sweep(const SweepSpec& spec) {
  const FamilyInfo info = family_info(spec.family);
  if (spec.points < 2) fail("'points' must be >= 2");
  if (spec.columns.empty()) fail("no quantities requested");

  // Resolve every column's operator choice once; the grid reuses them.
  std::vector<OperatorResolution> resolutions(spec.columns.size());
  for (std::size_t k = 0; k < spec.columns.size(); ++k) {
    const SweepColumn& col = spec.columns[k];
    if (!needs_operators(col.quantity)) continue;
    const Json ops = col.operators.is_null() ? default_operators(spec.family, col.quantity)
                                             : col.operators;
    resolutions[k] = resolve_operator_spec(ops, info.idx);
    if (col.quantity == "bound_multi_block") {
      check_blocks_orthogonal(resolutions[k].choices);
    } else if (resolutions[k].block_list) {
      fail("quantity '" + col.quantity + "' takes a single operator pair, not a block list");
    }
  }

  SweepTable table;
  table.header.push_back(spec.variable);
  for (const SweepColumn& col : spec.columns) table.header.push_back(col.column);
  table.rows.assign(static_cast<std::size_t>(spec.points),
                    std::vector<std::optional<double>>(table.header.size()));

  parallel_for(spec.points, [&](int j) {
    const double t = static_cast<double>(j) / static_cast<double>(spec.points - 1);
    const double value = spec.lo + (spec.hi - spec.lo) * t;
    std::map<std::string, double> params = spec.fixed;
    params[spec.variable] = value;
    const GridState gs = build_state(spec.family, params);

    auto& row = table.rows[static_cast<std::size_t>(j)];
    row[0] = value;
    for (std::size_t k = 0; k < spec.columns.size(); ++k) {
      row[k + 1] = evaluate_quantity(spec.columns[k].quantity, gs, resolutions[k]);
    }
  });
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t k = 0; k < table.header.size(); ++k) {
    if (k) out += ',';
    out += table.header[k];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      if (row[k]) out += format_sig12(*row[k]);
    }
    out += '\n';
  }
  return out;
}

void write_csv(const SweepTable& table, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_csv: cannot open '" + path + "' for writing");
  const std::string csv = to_csv(table);
  f.write(csv.data(), static_cast<std::streamsize>(csv.size()));
  if (!f) throw std::runtime_error("write_csv: write to '" + path + "' failed");
}

}  // namespace negabound
