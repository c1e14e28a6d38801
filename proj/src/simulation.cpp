#include "solpen/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "solpen/scheme.hpp"

namespace solpen {

namespace {

constexpr double snap_tol = 1e-9;

/// Scan the interior for the stop criterion. Non-finite values dominate:
/// they report peak_value = +inf at the first offending cell.
BlowupReport scan_field(const FieldArray& field, const Mesh1D& mesh, double t,
                        double threshold) {
  BlowupReport report;
  report.t_blowup = t;

  double peak = 0.0;
  int peak_cell = 0;
  for (int i = 0; i < mesh.n_cells; ++i) {
    const ConservativeState& u = field.cell(i);
    if (!std::isfinite(u.N) || !std::isfinite(u.Gamma)) {
      report.blew_up = true;
      report.x_peak = mesh.center(i);
      report.peak_value = std::numeric_limits<double>::infinity();
      return report;
    }
    const double m = std::abs(u.Gamma / floor_density(u.N));
    if (m > peak) {
      peak = m;
      peak_cell = i;
    }
  }

  report.x_peak = mesh.center(peak_cell);
  report.peak_value = peak;
  report.blew_up = peak > threshold;
  return report;
}

}  // namespace

void RunConfig::validate() const {
  if (!(t_end > 0.0)) throw std::invalid_argument("RunConfig: t_end must be positive");
  if (!(blowup_threshold > 1.0))
    throw std::invalid_argument("RunConfig: blowup_threshold must exceed 1");
  if (!(cfl > 0.0 && cfl < 1.0)) throw std::invalid_argument("RunConfig: cfl must lie in (0, 1)");
  if (order != 1 && order != 2) throw std::invalid_argument("RunConfig: order must be 1 or 2");
  boundary.validate();
  double prev = 0.0;
  for (double s : snapshot_times) {
    if (!(s >= prev) || s > t_end + snap_tol)
      throw std::invalid_argument("RunConfig: snapshot times must ascend within [0, t_end]");
    prev = s;
  }
}

FieldArray initial_field(const ManufacturedCase& mcase, const Mesh1D& mesh) {
  FieldArray field(mesh.n_cells);
  for (int i = 0; i < mesh.n_cells; ++i) field.cell(i) = mcase.exact(0.0, mesh.center(i));
  return field;
}

RunResult run_simulation(const RunConfig& cfg) {
  cfg.validate();

  RunResult result;
  result.field = initial_field(cfg.mcase, cfg.mesh);
  result.t = 0.0;

  HeunStepper stepper(cfg.mesh, cfg.boundary, cfg.penalty, &cfg.mcase,
                      /*with_sources=*/true, cfg.order);

  std::size_t next_snap = 0;
  const auto capture_due = [&](double t) {
    while (next_snap < cfg.snapshot_times.size() &&
           t >= cfg.snapshot_times[next_snap] - snap_tol) {
      const auto interior = result.field.interior();
      result.snapshots.push_back({t, {interior.begin(), interior.end()}});
      ++next_snap;
    }
  };

  capture_due(result.t);
  result.blowup = scan_field(result.field, cfg.mesh, result.t, cfg.blowup_threshold);
  if (result.blowup.blew_up) return result;

  while (result.t < cfg.t_end - snap_tol) {
    double dt = compute_dt(result.field, cfg.mesh, cfg.cfl);
    dt = std::min(dt, cfg.t_end - result.t);
    if (next_snap < cfg.snapshot_times.size())
      dt = std::min(dt, std::max(cfg.snapshot_times[next_snap] - result.t, snap_tol));

    const bool finite = stepper.step(result.field, result.t, dt);
    result.t += dt;
    ++result.steps;

    result.blowup = scan_field(result.field, cfg.mesh, result.t, cfg.blowup_threshold);
    if (!finite || result.blowup.blew_up) {
      result.blowup.blew_up = true;
      return result;
    }
    capture_due(result.t);
  }

  // Stragglers within tolerance of t_end (loop may exit marginally early).
  while (next_snap < cfg.snapshot_times.size() &&
         cfg.snapshot_times[next_snap] <= cfg.t_end + snap_tol) {
    const auto interior = result.field.interior();
    result.snapshots.push_back({result.t, {interior.begin(), interior.end()}});
    ++next_snap;
  }
  return result;
}

}  // namespace solpen
