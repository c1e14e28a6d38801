#include "solpen/study.hpp"

#include <future>
#include <string>
#include <utility>

namespace solpen {

namespace {

std::string blowup_message(double eta, int cells, const BlowupReport& report) {
  return "unexpected blow-up at eta = " + std::to_string(eta) + ", J = " +
         std::to_string(cells) + ", t = " + std::to_string(report.t_blowup);
}

}  // namespace

UnexpectedBlowup::UnexpectedBlowup(double eta_, int cells_, BlowupReport report_)
    : std::runtime_error(blowup_message(eta_, cells_, report_)),
      eta(eta_),
      cells(cells_),
      report(report_) {}

ConvergenceResult convergence_study(const std::vector<double>& etas, const RunConfig& base) {
  if (etas.size() < 3)
    throw std::invalid_argument("convergence_study: needs at least three eta values");
  for (std::size_t i = 0; i + 1 < etas.size(); ++i)
    if (!(etas[i] > etas[i + 1]))
      throw std::invalid_argument("convergence_study: etas must be sorted strictly descending");
  if (!(etas.front() > 0.0) || !(etas.back() > 0.0))
    throw std::invalid_argument("convergence_study: etas must be positive");
  if (base.penalty.kind == PenaltyKind::none)
    throw std::invalid_argument("convergence_study: base config must carry a penalty kind");
  base.validate();

  std::vector<std::future<RunResult>> futures;
  futures.reserve(etas.size());
  for (double eta : etas) {
    RunConfig cfg = base;
    cfg.penalty.eta = eta;
    futures.push_back(
        std::async(std::launch::async, [cfg = std::move(cfg)] { return run_simulation(cfg); }));
  }

  ConvergenceResult result;
  result.reports.reserve(etas.size());
  for (std::size_t i = 0; i < etas.size(); ++i) {
    RunResult run = futures[i].get();
    if (run.blowup.blew_up) throw UnexpectedBlowup(etas[i], base.mesh.n_cells, run.blowup);
    ErrorReport report = l1_errors(run.field, base.mcase, run.t, base.mesh);
    report.eta = etas[i];
    result.reports.push_back(report);
  }
  result.slopes = fit_slopes(result.reports);
  return result;
}

std::vector<BlowupRow> blowup_refinement_study(const std::vector<int>& resolutions,
                                               const RunConfig& base) {
  if (resolutions.size() < 2)
    throw std::invalid_argument("blowup_refinement_study: needs at least two resolutions");
  base.validate();

  std::vector<std::future<RunResult>> futures;
  futures.reserve(resolutions.size());
  for (int cells : resolutions) {
    RunConfig cfg = base;
    cfg.mesh = Mesh1D::make(base.mesh.x_min, base.mesh.x_max, cells, base.mesh.limiter_start);
    cfg.penalty = PenaltyConfig::make(base.penalty.kind, base.penalty.eta, base.penalty.m0,
                                      cfg.mesh);
    futures.push_back(
        std::async(std::launch::async, [cfg = std::move(cfg)] { return run_simulation(cfg); }));
  }

  std::vector<BlowupRow> rows;
  rows.reserve(resolutions.size());
  for (std::size_t i = 0; i < resolutions.size(); ++i) {
    RunResult run = futures[i].get();
    rows.push_back({resolutions[i], base.penalty.eta, run.blowup});
  }
  return rows;
}

}  // namespace solpen
