#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negabound/io.hpp"

namespace negabound {

/// One output column of a parameter sweep: a named quantity evaluated with a
/// fixed operator choice (JSON spec; empty = family default).
struct SweepColumn {
  std::string column;    // CSV header label
  std::string quantity;  // see run_sweep for the supported names
  Json operators;        // operator spec; null selects the family default
};

/// A one-parameter family sweep. Families:
///   bell_like            parameter lambda0 on (2,2)
///   noisy                parameters lambda0, p on (2,2); sweep one, fix the other
///   four_qubit_symmetric parameter lambda00 in [0, 1/2] on (4,4) with
///                        lambda10 = lambda00, lambda01 = lambda11 = (1-2*lambda00)/2
struct SweepSpec {
  std::string family;
  std::string variable;
  double lo = 0.0;
  double hi = 1.0;
  int points = 201;
  std::map<std::string, double> fixed;  // family parameters not swept
  std::vector<SweepColumn> columns;

  /// Parses {"family","variable","range":[lo,hi],"points","fixed":{..},
  /// "quantities":[name | {"column","quantity","operators"}...]}.
  static SweepSpec from_json(const Json& spec);
};

/// Sweep output; cells are empty when the quantity's hypothesis failed at
/// that grid point (e.g. a bound with kappa <= 0).
struct SweepTable {
  std::vector<std::string> header;  // variable name first, then column labels
  std::vector<std::vector<std::optional<double>>> rows;
};

/// Evaluates the sweep on a uniform grid of `points` values in [lo, hi]
/// (rows are independent and evaluated in parallel). Quantities:
///   negativity_exact, negativity_pure, kappa_first, kappa_second,
///   bound_first_qubit, bound_first_improved, bound_second_method,
///   bound_second_zero_x, bound_second_qubit, bound_multi_block
SweepTable run_sweep(const SweepSpec& spec);

/// Byte-deterministic CSV: ',' separator, '\n' newlines, '.' decimal point,
/// 12 significant digits, empty string for empty cells.
std::string to_csv(const SweepTable& table);

void write_csv(const SweepTable& table, const std::string& path);

}  // namespace negabound
