#pragma once

#include <vector>

#include "solpen/boundary.hpp"
#include "solpen/field.hpp"
#include "solpen/manufactured.hpp"
#include "solpen/mesh.hpp"
#include "solpen/penalty.hpp"

namespace solpen {

/// Outcome of the stop criterion max_i |M_i| > threshold. When the field
/// turns non-finite before the threshold is crossed, the report carries
/// peak_value = +inf and the position of the first bad cell.
struct BlowupReport {
  bool blew_up = false;
  double t_blowup = 0.0;
  double x_peak = 0.0;
  double peak_value = 0.0;
};

struct Snapshot {
  double t = 0.0;
  std::vector<ConservativeState> cells;
};

/// Full description of one simulation: mesh, penalty, boundaries, the
/// manufactured case supplying initial data and source terms, and the
/// stopping rules.
struct RunConfig {
  Mesh1D mesh;
  PenaltyConfig penalty;
  BoundarySpec boundary;
  ManufacturedCase mcase = ManufacturedCase::case_b(0.9);
  double t_end = 1.0;
  double cfl = 0.45;
  double blowup_threshold = 10.0;
  int order = 2;
  std::vector<double> snapshot_times;  // ascending, within [0, t_end]

  /// Throws std::invalid_argument on t_end <= 0, blowup_threshold <= 1,
  /// cfl outside (0, 1), order outside {1, 2}, or unsorted/out-of-range
  /// snapshot times.
  void validate() const;
};

struct RunResult {
  FieldArray field;
  double t = 0.0;
  long steps = 0;
  BlowupReport blowup;
  std::vector<Snapshot> snapshots;
};

/// Cell averages initialized by point sampling the exact solution at t = 0,
/// limiter cells included.
FieldArray initial_field(const ManufacturedCase& mcase, const Mesh1D& mesh);

/// Advance from the exact initial data with adaptive dt (compute_dt, clipped
/// to land exactly on snapshot times and t_end) until t_end or blow-up.
/// Blow-up is part of the result, never an exception.
RunResult run_simulation(const RunConfig& cfg);

}  // namespace solpen
