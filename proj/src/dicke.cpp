#include "negabound/dicke.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace negabound {

DickeModel DickeModel::make(double j, int n_max, double omega, double g) {
  const double two_j = 2.0 * j;
  if (j <= 0.0 || std::abs(two_j - std::lround(two_j)) > 1e-9) {
    throw std::invalid_argument("DickeModel: j must be a positive half-integer, got " +
                                std::to_string(j));
  }
  if (std::lround(two_j) < 1) throw std::invalid_argument("DickeModel: need 2j >= 1");
  if (n_max < 1) throw std::invalid_argument("DickeModel: n_max must be >= 1");
  if (!std::isfinite(omega) || !std::isfinite(g)) {
    throw std::invalid_argument("DickeModel: omega and g must be finite");
  }
  return DickeModel{j, n_max, omega, g};
}

int sector_dim(const DickeModel& model, int excitation) {
  if (excitation < 0) throw std::invalid_argument("sector_dim: excitation must be >= 0");
  const int two_j = static_cast<int>(std::lround(2.0 * model.j));
  return std::min(excitation, two_j) + 1;
}

Matrix build_hamiltonian_sector(const DickeModel& model, int excitation) {
  const int d = sector_dim(model, excitation);
  const double j = model.j;
  Matrix h = Matrix::Zero(d, d);
  for (int lp = 0; lp < d; ++lp) {
    const double m = -j + lp;
    const double n = static_cast<double>(excitation - lp);
    h(lp, lp) = model.omega * m + model.omega * n;
    if (lp + 1 < d) {
      // <l'+1, n-1| S+ a |l', n> = sqrt((2j - l')(l' + 1)) sqrt(n)
      const double coupling =
          model.g * std::sqrt((2.0 * j - lp) * (lp + 1.0) * (excitation - lp));
      h(lp + 1, lp) = coupling;
      h(lp, lp + 1) = coupling;
    }
  }
  return h;
}

namespace {

Matrix spin_lowering_adjoint(const DickeModel& model) {
  // S+ in the l-basis: <l+1|S+|l> = sqrt((2j - l)(l + 1)).
  const int d = model.spin_dim();
  Matrix sp = Matrix::Zero(d, d);
  for (int l = 0; l + 1 < d; ++l) {
    sp(l + 1, l) = std::sqrt((2.0 * model.j - l) * (l + 1.0));
  }
  return sp;
}

Matrix boson_annihilation(const DickeModel& model) {
  const int d = model.field_dim();
  Matrix a = Matrix::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

}  // namespace

Matrix build_hamiltonian_full(const DickeModel& model) {
  const int ds = model.spin_dim();
  const int df = model.field_dim();
  Matrix s3 = Matrix::Zero(ds, ds);
  for (int l = 0; l < ds; ++l) s3(l, l) = -model.j + l;
  Matrix num = Matrix::Zero(df, df);
  for (int n = 0; n < df; ++n) num(n, n) = n;
  const Matrix sp = spin_lowering_adjoint(model);
  const Matrix a = boson_annihilation(model);
  return model.omega * kron(s3, Matrix::Identity(df, df)) +
         model.omega * kron(Matrix::Identity(ds, ds), num) +
         model.g * (kron(sp, a) + kron(sp.adjoint(), a.adjoint()));
}

Matrix excitation_operator(const DickeModel& model) {
  const int ds = model.spin_dim();
  const int df = model.field_dim();
  Matrix s3 = Matrix::Zero(ds, ds);
  for (int l = 0; l < ds; ++l) s3(l, l) = -model.j + l;
  Matrix num = Matrix::Zero(df, df);
  for (int n = 0; n < df; ++n) num(n, n) = n;
  return kron(s3, Matrix::Identity(df, df)) + kron(Matrix::Identity(ds, ds), num);
}

double excitation_expectation(const DickeModel& model, const PureState& state) {
  if (state.idx != model.index()) {
    throw std::invalid_argument("excitation_expectation: state does not match the model dims");
  }
  double total = 0.0;
  const int df = model.field_dim();
  for (int l = 0; l < model.spin_dim(); ++l) {
    for (int n = 0; n < df; ++n) {
      total += std::norm(state.amplitudes(l * df + n)) * (-model.j + l + n);
    }
  }
  return total;
}

PureState spin_field_basis_state(const DickeModel& model, int l, int n) {
  if (l < 0 || l >= model.spin_dim()) {
    throw std::invalid_argument("spin_field_basis_state: spin level out of range");
  }
  if (n < 0 || n > model.n_max) {
    throw std::invalid_argument("spin_field_basis_state: boson level out of range");
  }
  Vector amp = Vector::Zero(model.index().total());
  amp(l * model.field_dim() + n) = 1.0;
  return PureState::make(model.index(), std::move(amp));
}

PureState make_two_level_initial(const DickeModel& model, Complex c0, Complex c1, int l1, int l2) {
  if (l1 < 0 || l2 < 0 || l1 >= model.spin_dim() || l2 >= model.spin_dim() || l1 == l2) {
    throw std::invalid_argument("make_two_level_initial: spin levels must be distinct and in range");
  }
  const double norm2 = std::norm(c0) + std::norm(c1);
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw std::invalid_argument("make_two_level_initial: |c0|^2 + |c1|^2 = " +
                                std::to_string(norm2) + ", expected 1");
  }
  Vector amp = Vector::Zero(model.index().total());
  amp(l1 * model.field_dim() + 0) = c0;
  amp(l2 * model.field_dim() + 0) = c1;
  amp /= amp.norm();
  return PureState::make(model.index(), std::move(amp));
}

PureState evolve(const DickeModel& model, const PureState& initial, double t) {
  if (initial.idx != model.index()) {
    throw std::invalid_argument("evolve: state does not match the model dims");
  }
  const int df = model.field_dim();
  const int two_j = static_cast<int>(std::lround(2.0 * model.j));
  // The cutoff must cover every populated excitation sector; then each
  // sector evolves exactly under its own tridiagonal block.
  for (int l = 0; l <= two_j; ++l) {
    for (int n = 0; n <= model.n_max; ++n) {
      if (l + n > model.n_max && std::abs(initial.amplitudes(l * df + n)) > 1e-12) {
        throw std::invalid_argument("evolve: initial state populates excitation " +
                                    std::to_string(l + n) + " beyond the cutoff n_max = " +
                                    std::to_string(model.n_max));
      }
    }
  }
  Vector out = initial.amplitudes;
  for (int sector = 0; sector <= model.n_max; ++sector) {
    const int d = sector_dim(model, sector);
    Vector c(d);
    double weight = 0.0;
    for (int lp = 0; lp < d; ++lp) {
      c(lp) = initial.amplitudes(lp * df + (sector - lp));
      weight += std::norm(c(lp));
    }
    if (weight == 0.0) continue;
    const EigResult eig = hermitian_eigs(build_hamiltonian_sector(model, sector));
    Vector phases(d);
    for (int k = 0; k < d; ++k) phases(k) = std::polar(1.0, -eig.values(k) * t);
    const Vector evolved = eig.vectors * phases.asDiagonal() * (eig.vectors.adjoint() * c);
    for (int lp = 0; lp < d; ++lp) out(lp * df + (sector - lp)) = evolved(lp);
  }
  out /= out.norm();
  return PureState::make(model.index(), std::move(out));
}

std::string to_string(SchmidtVectorStatus s) {
  switch (s) {
    case SchmidtVectorStatus::Confirmed: return "confirmed";
    case SchmidtVectorStatus::Indeterminate: return "indeterminate";
    case SchmidtVectorStatus::Failed: return "failed";
  }
  throw std::logic_error("to_string(SchmidtVectorStatus): unknown value");
}

int SchmidtVectorReport::confirmed_count() const {
  int n = 0;
  for (const SchmidtVectorEntry& e : entries) {
    if (e.status == SchmidtVectorStatus::Confirmed) ++n;
  }
  return n;
}

namespace {

constexpr double kDegenerateGap = 1e-8;

SchmidtVectorEntry classify_product_vector(const SchmidtData& sd, int s, int spin_level,
                                           int boson_level) {
  SchmidtVectorEntry entry;
  entry.s = s;
  entry.spin_level = spin_level;
  entry.boson_level = boson_level;
  // The claimed a-side vector is e_{spin_level}, so the overlap with Schmidt
  // vector k is just |u_k(spin_level)|.
  Eigen::Index best = 0;
  double best_overlap = -1.0;
  for (Eigen::Index k = 0; k < sd.coefficients.size(); ++k) {
    const double ov = std::abs(sd.basis_a[static_cast<std::size_t>(k)](spin_level));
    if (ov > best_overlap) {
      best_overlap = ov;
      best = k;
    }
  }
  entry.overlap_a = best_overlap;
  entry.overlap_b = std::abs(sd.basis_b[static_cast<std::size_t>(best)](boson_level));
  entry.coefficient = sd.coefficients(best);
  if (entry.overlap_a >= 1.0 - kDegenerateGap && entry.overlap_b >= 1.0 - kDegenerateGap) {
    entry.status = SchmidtVectorStatus::Confirmed;
    return entry;
  }
  for (Eigen::Index k = 0; k < sd.coefficients.size(); ++k) {
    if (k != best && std::abs(sd.coefficients(k) - entry.coefficient) < kDegenerateGap) {
      entry.status = SchmidtVectorStatus::Indeterminate;
      return entry;
    }
  }
  entry.status = SchmidtVectorStatus::Failed;
  return entry;
}

}  // namespace

SchmidtVectorReport schmidt_vector_check(const DickeModel& model, Complex c0, Complex c1, int l1,
                                         int l2, double t) {
  if (l1 >= l2) throw std::invalid_argument("schmidt_vector_check: need l1 < l2");
  if (model.n_max < l2) {
    throw std::invalid_argument("schmidt_vector_check: cutoff n_max = " +
                                std::to_string(model.n_max) +
                                " does not cover excitation l2 = " + std::to_string(l2));
  }
  const bool only_lower = std::abs(c1) <= 1e-12;
  const bool only_upper = std::abs(c0) <= 1e-12;
  if (!only_lower && !only_upper && l2 <= 2 * (l1 + 1)) {
    throw std::invalid_argument(
        "schmidt_vector_check: the predicted window needs l2 > 2 (l1 + 1); got l1 = " +
        std::to_string(l1) + ", l2 = " + std::to_string(l2));
  }

  SchmidtVectorReport report;
  report.time = t;
  report.evolved = evolve(model, make_two_level_initial(model, c0, c1, l1, l2), t);
  report.schmidt_data = schmidt(report.evolved);

  const int two_j = static_cast<int>(std::lround(2.0 * model.j));
  if (only_lower || only_upper) {
    // Single populated sector: the state is already in Schmidt form, so every
    // product vector of that sector is predicted.
    const int sector = only_lower ? l1 : l2;
    for (int lp = 0; lp <= std::min(sector, two_j); ++lp) {
      report.entries.push_back(
          classify_product_vector(report.schmidt_data, lp, lp, sector - lp));
    }
  } else {
    for (int s = 1; s <= l2 - 2 * l1 - 1; ++s) {
      report.entries.push_back(
          classify_product_vector(report.schmidt_data, s, l1 + s, l2 - l1 - s));
    }
  }
  return report;
}

DickeBoundResult dicke_schmidt_bound(const DickeModel& model, Complex c0, Complex c1, int l1,
                                     int l2, double t, int k) {
  DickeBoundResult result;
  result.check = schmidt_vector_check(model, c0, c1, l1, l2, t);

  struct Identified {
    double coefficient;
    int spin_level;
    int boson_level;
  };
  std::vector<Identified> identified;
  for (const SchmidtVectorEntry& e : result.check.entries) {
    if (e.status == SchmidtVectorStatus::Confirmed) {
      identified.push_back(Identified{e.coefficient, e.spin_level, e.boson_level});
    }
  }
  std::stable_sort(identified.begin(), identified.end(),
                   [](const Identified& a, const Identified& b) {
                     return a.coefficient > b.coefficient;
                   });

  if (identified.size() < 2) {
    result.certificate.method = BoundMethod::SchmidtKnown;
    result.certificate.applicable = false;
    result.certificate.notes = "only " + std::to_string(identified.size()) +
                               " Schmidt vectors identified; need at least 2";
    return result;
  }

  // Schmidt data restricted to the identified product vectors.
  SchmidtData known;
  known.idx = model.index();
  known.coefficients = RealVector(static_cast<Eigen::Index>(identified.size()));
  for (std::size_t i = 0; i < identified.size(); ++i) {
    known.coefficients(static_cast<Eigen::Index>(i)) = identified[i].coefficient;
    Vector u = Vector::Zero(model.spin_dim());
    u(identified[i].spin_level) = 1.0;
    Vector v = Vector::Zero(model.field_dim());
    v(identified[i].boson_level) = 1.0;
    known.basis_a.push_back(std::move(u));
    known.basis_b.push_back(std::move(v));
  }

  const BipartiteState rho = result.check.evolved.density();
  const int n = static_cast<int>(identified.size());
  if (k != 0 && (k < 1 || k > n - 1)) {
    throw std::invalid_argument("dicke_schmidt_bound: k must be 0 (scan) or in [1, " +
                                std::to_string(n - 1) + "]");
  }
  bool have = false;
  for (int kk = (k == 0 ? 1 : k); kk <= (k == 0 ? n - 1 : k); ++kk) {
    const auto [a, b] = schmidt_partition_operators(known, kk);
    BoundCertificate cert = bound_schmidt_known(rho, a, b);
    cert.inputs["k"] = kk;
    cert.inputs["identified"] = n;
    const bool better =
        !have ||
        (cert.applicable && !result.certificate.applicable) ||
        (cert.applicable == result.certificate.applicable &&
         cert.lower_bound > result.certificate.lower_bound);
    if (better) {
      result.certificate = std::move(cert);
      result.k_used = kk;
      have = true;
    }
  }
  check_certificate_against_dims(result.certificate, model.index());
  return result;
}

}  // namespace negabound
