#pragma once

#include <stdexcept>
#include <vector>

#include "solpen/error_norms.hpp"
#include "solpen/simulation.hpp"

namespace solpen {

/// A sweep member blew up where the study expected a smooth run.
class UnexpectedBlowup : public std::runtime_error {
 public:
  UnexpectedBlowup(double eta_, int cells_, BlowupReport report_);

  double eta;
  int cells;
  BlowupReport report;
};

struct ConvergenceResult {
  std::vector<ErrorReport> reports;  // one per eta, in input order
  SlopeFit slopes;
};

/// One run per eta on the fixed base mesh, errors measured at the final
/// time, least-squares slopes of log(error) vs log(eta). Members run
/// concurrently. Requires >= 3 etas sorted strictly descending and a
/// penalized base config; throws UnexpectedBlowup if any member blows up.
ConvergenceResult convergence_study(const std::vector<double>& etas, const RunConfig& base);

struct BlowupRow {
  int cells = 0;
  double eta = 0.0;
  BlowupReport report;
};

/// One run per resolution with the base config's domain and penalty. A row
/// whose run did not blow up is returned with blew_up = false and the
/// final-time Mach statistics; it is a finding, not an error. Requires
/// >= 2 resolutions. Members run concurrently.
std::vector<BlowupRow> blowup_refinement_study(const std::vector<int>& resolutions,
                                               const RunConfig& base);

}  // namespace solpen
