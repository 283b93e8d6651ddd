#include "negabound/io.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

namespace negabound {

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw std::invalid_argument(context + ": " + what);
}

const Json& require_field(const Json& j, const char* key, const std::string& context) {
  if (!j.is_object()) fail(context, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(context, std::string("missing field '") + key + "'");
  return *it;
}

double get_number(const Json& j, const char* key, const std::string& context) {
  const Json& v = require_field(j, key, context);
  if (!v.is_number()) fail(context, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

int get_int(const Json& j, const char* key, const std::string& context) {
  const Json& v = require_field(j, key, context);
  if (!v.is_number_integer()) fail(context, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::uint64_t get_seed(const Json& j, const char* key, const std::string& context) {
  const Json& v = require_field(j, key, context);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    fail(context, std::string("field '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

BipartiteIndex get_dims(const Json& j, const std::string& context) {
  const Json& v = require_field(j, "dims", context);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
    fail(context, "field 'dims' must be an array [dim_a, dim_b] of integers");
  }
  return BipartiteIndex::make(v[0].get<int>(), v[1].get<int>());
}

/// {"re": [..], "im": [..]} with im optional (defaults to zero).
Vector parse_complex_vector(const Json& j, const std::string& context) {
  const Json& re = require_field(j, "re", context);
  if (!re.is_array() || re.empty()) fail(context, "'re' must be a nonempty array");
  const Eigen::Index n = static_cast<Eigen::Index>(re.size());
  Vector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& c = re[static_cast<std::size_t>(i)];
    if (!c.is_number()) fail(context, "'re' entries must be numbers");
    out(i) = Complex(c.get<double>(), 0.0);
  }
  if (auto it = j.find("im"); it != j.end()) {
    if (!it->is_array() || static_cast<Eigen::Index>(it->size()) != n) {
      fail(context, "'im' must be an array matching 're' in length");
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      const Json& c = (*it)[static_cast<std::size_t>(i)];
      if (!c.is_number()) fail(context, "'im' entries must be numbers");
      out(i) += Complex(0.0, c.get<double>());
    }
  }
  return out;
}

/// {"re": [[..]], "im": [[..]]} with im optional (defaults to zero).
Matrix parse_complex_matrix(const Json& j, const std::string& context) {
  const Json& re = require_field(j, "re", context);
  if (!re.is_array() || re.empty() || !re[0].is_array() || re[0].empty()) {
    fail(context, "'re' must be a nonempty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(re.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(re[0].size());
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = re[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      fail(context, "'re' rows must all have the same length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& c = row[static_cast<std::size_t>(k)];
      if (!c.is_number()) fail(context, "'re' entries must be numbers");
      out(i, k) = Complex(c.get<double>(), 0.0);
    }
  }
  if (auto it = j.find("im"); it != j.end()) {
    const Json& im = *it;
    if (!im.is_array() || static_cast<Eigen::Index>(im.size()) != rows) {
      fail(context, "'im' must match 're' in shape");
    }
    for (Eigen::Index i = 0; i < rows; ++i) {
      const Json& row = im[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
        fail(context, "'im' must match 're' in shape");
      }
      for (Eigen::Index k = 0; k < cols; ++k) {
        const Json& c = row[static_cast<std::size_t>(k)];
        if (!c.is_number()) fail(context, "'im' entries must be numbers");
        out(i, k) += Complex(0.0, c.get<double>());
      }
    }
  }
  return out;
}

}  // namespace

Json certificate_to_json(const BoundCertificate& cert) {
  Json j;
  j["method"] = to_string(cert.method);
  j["lower_bound"] = cert.lower_bound;
  j["applicable"] = cert.applicable;
  j["inputs"] = cert.inputs;
  j["notes"] = cert.notes;
  return j;
}

BoundCertificate certificate_from_json(const Json& j) {
  const std::string ctx = "certificate_from_json";
  BoundCertificate cert;
  const Json& method = require_field(j, "method", ctx);
  if (!method.is_string()) fail(ctx, "'method' must be a string");
  cert.method = bound_method_from_string(method.get<std::string>());
  const Json& lb = require_field(j, "lower_bound", ctx);
  if (!lb.is_number()) fail(ctx, "'lower_bound' must be a number");
  cert.lower_bound = lb.get<double>();
  const Json& app = require_field(j, "applicable", ctx);
  if (!app.is_boolean()) fail(ctx, "'applicable' must be a boolean");
  cert.applicable = app.get<bool>();
  const Json& inputs = require_field(j, "inputs", ctx);
  if (!inputs.is_object()) fail(ctx, "'inputs' must be an object");
  for (const auto& [key, value] : inputs.items()) {
    if (!value.is_number()) fail(ctx, "'inputs' values must be numbers");
    cert.inputs[key] = value.get<double>();
  }
  const Json& notes = require_field(j, "notes", ctx);
  if (!notes.is_string()) fail(ctx, "'notes' must be a string");
  cert.notes = notes.get<std::string>();
  return cert;
}

Json kappa_report_to_json(const KappaReport& report) {
  Json j;
  j["condition"] = to_string(report.condition);
  j["kappa"] = report.kappa;
  j["mean_op"] = Json{{"re", report.mean_op.real()}, {"im", report.mean_op.imag()}};
  if (report.condition == Condition::First) {
    j["mean_AdABdB"] = report.mean_AdABdB;
    if (report.a_diag) j["a_diag"] = *report.a_diag;
  } else {
    j["mean_AdA"] = report.mean_AdA;
    j["mean_BdB"] = report.mean_BdB;
    if (report.alpha) j["alpha"] = *report.alpha;
  }
  j["consistent"] = report.consistent();
  return j;
}

ResolvedState resolve_state_spec(const Json& spec) {
  const std::string ctx = "state spec";
  const Json& kind_field = require_field(spec, "kind", ctx);
  if (!kind_field.is_string()) fail(ctx, "'kind' must be a string");
  const std::string kind = kind_field.get<std::string>();

  ResolvedState out;
  if (kind == "bell_like") {
    const double lambda0 = get_number(spec, "lambda0", ctx);
    PureState ps = make_bell_like(lambda0);
    out.state = ps.density();
    out.pure = std::move(ps);
    out.provenance = Json{{"kind", kind}, {"lambda0", lambda0}};
  } else if (kind == "noisy") {
    const double lambda0 = get_number(spec, "lambda0", ctx);
    const double p = get_number(spec, "p", ctx);
    out.state = make_noisy(lambda0, p);
    out.provenance = Json{{"kind", kind}, {"lambda0", lambda0}, {"p", p}};
  } else if (kind == "four_qubit") {
    const Json& ls = require_field(spec, "lambdas", ctx);
    if (!ls.is_array() || ls.size() != 4) fail(ctx, "'lambdas' must be an array of 4 weights");
    std::array<double, 4> lambdas{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!ls[i].is_number()) fail(ctx, "'lambdas' entries must be numbers");
      lambdas[i] = ls[i].get<double>();
    }
    PureState ps = make_four_qubit(lambdas);
    out.state = ps.density();
    out.pure = std::move(ps);
    out.provenance = Json{{"kind", kind}, {"lambdas", lambdas}};
  } else if (kind == "max_entangled") {
    const int n = get_int(spec, "n", ctx);
    PureState ps = make_max_entangled(n);
    out.state = ps.density();
    out.pure = std::move(ps);
    out.provenance = Json{{"kind", kind}, {"n", n}};
  } else if (kind == "raw") {
    const BipartiteIndex idx = get_dims(spec, ctx);
    Matrix rho = parse_complex_matrix(spec, ctx + " (raw matrix)");
    out.state = BipartiteState::make(idx, std::move(rho));
    out.provenance = Json{{"kind", kind}, {"dims", {idx.dim_a, idx.dim_b}}};
  } else if (kind == "random_pure") {
    const BipartiteIndex idx = get_dims(spec, ctx);
    const std::uint64_t seed = get_seed(spec, "seed", ctx);
    PureState ps = random_pure(idx, seed);
    out.state = ps.density();
    out.pure = std::move(ps);
    out.provenance = Json{{"kind", kind},
                          {"dims", {idx.dim_a, idx.dim_b}},
                          {"seed", seed},
                          {"generator", kGeneratorName}};
  } else if (kind == "random_mixed") {
    const BipartiteIndex idx = get_dims(spec, ctx);
    const int rank = get_int(spec, "rank", ctx);
    const std::uint64_t seed = get_seed(spec, "seed", ctx);
    out.state = random_mixed(idx, rank, seed);
    out.provenance = Json{{"kind", kind},
                          {"dims", {idx.dim_a, idx.dim_b}},
                          {"rank", rank},
                          {"seed", seed},
                          {"generator", kGeneratorName}};
  } else {
    fail(ctx, "unknown kind '" + kind + "'");
  }
  return out;
}

namespace {

OperatorChoice choice_from_pair(std::string name, const RankOnePair& pair) {
  auto [a, b] = rank_one(pair);
  return OperatorChoice{std::move(name), std::move(a), std::move(b), pair};
}

void require_dims(const BipartiteIndex& idx, Eigen::Index da, Eigen::Index db,
                  const std::string& kind) {
  if (idx.dim_a != da || idx.dim_b != db) {
    fail("operator spec", "kind '" + kind + "' requires dims (" + std::to_string(da) + ", " +
                              std::to_string(db) + "), got (" + std::to_string(idx.dim_a) + ", " +
                              std::to_string(idx.dim_b) + ")");
  }
}

OperatorChoice resolve_single_choice(const Json& spec, const BipartiteIndex& idx) {
  const std::string ctx = "operator spec";
  const Json& kind_field = require_field(spec, "kind", ctx);
  if (!kind_field.is_string()) fail(ctx, "'kind' must be a string");
  const std::string kind = kind_field.get<std::string>();

  if (kind == "pauli_lowering") {
    require_dims(idx, 2, 2, kind);
    return choice_from_pair(kind, sigma_minus_pair());
  }
  if (kind == "pauli_raising") {
    require_dims(idx, 2, 2, kind);
    return choice_from_pair(kind, sigma_plus_pair());
  }
  if (kind == "x_basis") {
    require_dims(idx, 2, 2, kind);
    return choice_from_pair(kind, x_basis_pair());
  }
  if (kind == "four_qubit_coarse" || kind == "four_qubit_fine1" || kind == "four_qubit_fine2") {
    require_dims(idx, 4, 4, kind);
    const auto sets = four_qubit_operator_sets();
    const std::size_t which = kind == "four_qubit_coarse" ? 0 : (kind == "four_qubit_fine1" ? 1 : 2);
    const NamedOperatorPair& named = sets[which];
    return OperatorChoice{kind, named.a, named.b, named.pair};
  }
  if (kind == "rank_one") {
    Vector eta0 = parse_complex_vector(require_field(spec, "eta0", ctx), ctx + " (eta0)");
    Vector eta1 = parse_complex_vector(require_field(spec, "eta1", ctx), ctx + " (eta1)");
    Vector xi0 = parse_complex_vector(require_field(spec, "xi0", ctx), ctx + " (xi0)");
    Vector xi1 = parse_complex_vector(require_field(spec, "xi1", ctx), ctx + " (xi1)");
    if (eta0.size() != idx.dim_a || eta1.size() != idx.dim_a) {
      fail(ctx, "eta vectors must have length dim_a = " + std::to_string(idx.dim_a));
    }
    if (xi0.size() != idx.dim_b || xi1.size() != idx.dim_b) {
      fail(ctx, "xi vectors must have length dim_b = " + std::to_string(idx.dim_b));
    }
    return choice_from_pair(kind, RankOnePair::make(std::move(eta0), std::move(eta1),
                                                    std::move(xi0), std::move(xi1)));
  }
  if (kind == "general") {
    Matrix ma = parse_complex_matrix(require_field(spec, "a", ctx), ctx + " (a)");
    Matrix mb = parse_complex_matrix(require_field(spec, "b", ctx), ctx + " (b)");
    if (ma.rows() != idx.dim_a || ma.cols() != idx.dim_a) {
      fail(ctx, "'a' must be a dim_a x dim_a matrix");
    }
    if (mb.rows() != idx.dim_b || mb.cols() != idx.dim_b) {
      fail(ctx, "'b' must be a dim_b x dim_b matrix");
    }
    if (!all_finite(ma) || !all_finite(mb)) fail(ctx, "operator matrices must be finite");
    return OperatorChoice{kind, LocalOperator{Subsystem::A, std::move(ma)},
                          LocalOperator{Subsystem::B, std::move(mb)}, std::nullopt};
  }
  fail(ctx, "unknown kind '" + kind + "'");
}

}  // namespace

OperatorResolution resolve_operator_spec(const Json& spec, const BipartiteIndex& idx) {
  const std::string ctx = "operator spec";
  const Json& kind_field = require_field(spec, "kind", ctx);
  if (!kind_field.is_string()) fail(ctx, "'kind' must be a string");
  const std::string kind = kind_field.get<std::string>();

  OperatorResolution out;
  if (kind == "four_qubit_fine_blocks") {
    require_dims(idx, 4, 4, kind);
    const auto sets = four_qubit_operator_sets();
    out.choices.push_back(OperatorChoice{"four_qubit_fine1", sets[1].a, sets[1].b, sets[1].pair});
    out.choices.push_back(OperatorChoice{"four_qubit_fine2", sets[2].a, sets[2].b, sets[2].pair});
    out.block_list = true;
    return out;
  }
  if (kind == "block_list") {
    const Json& pairs = require_field(spec, "pairs", ctx);
    if (!pairs.is_array() || pairs.empty()) fail(ctx, "'pairs' must be a nonempty array");
    for (const Json& p : pairs) {
      OperatorChoice choice = resolve_single_choice(p, idx);
      if (!choice.pair) fail(ctx, "block_list entries must resolve to rank-one pairs");
      out.choices.push_back(std::move(choice));
    }
    out.block_list = true;
    return out;
  }
  out.choices.push_back(resolve_single_choice(spec, idx));
  return out;
}

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

}  // namespace negabound
