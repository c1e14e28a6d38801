#include <cmath>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "solpen/csv_io.hpp"
#include "solpen/error_norms.hpp"
#include "solpen/simulation.hpp"
#include "solpen/study.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_io = 3;
constexpr int exit_blowup = 4;

struct CommonFlags {
  std::string penalty;
  double eta = 0.0;
  double m0 = 0.0;
  double epsilon = 0.1;
  int cells = 0;
  double t_end = 0.0;
  double cfl = 0.45;
  double threshold = 10.0;
  std::string case_id;
  int order = 2;
  std::string out;

  bool m0_given = false;
  bool epsilon_given = false;
};

/// Register the flags shared by the subcommands, with per-command defaults.
void add_common_flags(CLI::App& cmd, CommonFlags& f, const std::string& default_penalty,
                      double default_eta, int default_cells, double default_t_end,
                      const std::string& default_case, const std::string& default_out) {
  f.penalty = default_penalty;
  f.eta = default_eta;
  f.cells = default_cells;
  f.t_end = default_t_end;
  f.case_id = default_case;
  f.out = default_out;

  cmd.add_option("--penalty", f.penalty, "Penalty kind: none|isoardi|linear|mach")
      ->check(CLI::IsMember({"none", "isoardi", "linear", "mach"}))
      ->capture_default_str();
  cmd.add_option("--eta", f.eta, "Penalization parameter")->capture_default_str();
  cmd.add_option("--cells", f.cells, "Number of mesh cells J")->capture_default_str();
  cmd.add_option("--m0", f.m0, "Target Mach number M0 (default 1 - epsilon)");
  cmd.add_option("--epsilon", f.epsilon, "Mach gap: M0 = 1 - epsilon")->capture_default_str();
  cmd.add_option("--t-end", f.t_end, "Final time")->capture_default_str();
  cmd.add_option("--cfl", f.cfl, "CFL number")->capture_default_str();
  cmd.add_option("--threshold", f.threshold, "Blow-up stop criterion on max |M|")
      ->capture_default_str();
  cmd.add_option("--case", f.case_id, "Manufactured case: a|b")
      ->check(CLI::IsMember({"a", "b"}))
      ->capture_default_str();
  cmd.add_option("--order", f.order, "Reconstruction order: 1|2")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  cmd.add_option("--out", f.out, "Output CSV path")->capture_default_str();
}

solpen::PenaltyKind parse_kind(const std::string& name) {
  if (name == "none") return solpen::PenaltyKind::none;
  if (name == "isoardi") return solpen::PenaltyKind::isoardi;
  if (name == "linear") return solpen::PenaltyKind::linear_gues;
  if (name == "mach") return solpen::PenaltyKind::mach_gues;
  throw std::invalid_argument("unknown penalty kind: " + name);
}

/// Resolve M0 from --m0 / --epsilon, rejecting contradictory values.
double resolve_m0(const CommonFlags& f) {
  const double from_eps = 1.0 - f.epsilon;
  if (f.m0_given && f.epsilon_given && std::abs(f.m0 - from_eps) > 1e-12)
    throw std::invalid_argument("--m0 and --epsilon disagree: m0 = " + std::to_string(f.m0) +
                                " but 1 - epsilon = " + std::to_string(from_eps));
  return f.m0_given ? f.m0 : from_eps;
}

/// Build the full RunConfig shared by all subcommands. Penalized runs use
/// the domain [0, 0.5] with the limiter on [0.4, 0.5], symmetry on the left
/// and a transparent right end. Unpenalized runs drop the limiter block and
/// close the plasma region [0, 0.4] with a Dirichlet Mach condition.
solpen::RunConfig build_config(const CommonFlags& f) {
  const solpen::PenaltyKind kind = parse_kind(f.penalty);
  const double m0 = resolve_m0(f);

  solpen::RunConfig cfg;
  if (kind == solpen::PenaltyKind::none) {
    cfg.mesh = solpen::Mesh1D::make(0.0, 0.4, f.cells, 0.4);
    cfg.boundary.right = solpen::RightBoundary::dirichlet_mach;
    cfg.boundary.right_mach = m0;
  } else {
    cfg.mesh = solpen::Mesh1D::make(0.0, 0.5, f.cells, 0.4);
    cfg.boundary.right = solpen::RightBoundary::transparent;
  }
  cfg.boundary.left = solpen::LeftBoundary::symmetry;
  cfg.boundary.epsilon = f.epsilon;
  cfg.penalty = solpen::PenaltyConfig::make(kind, f.eta, m0, cfg.mesh);
  cfg.mcase = f.case_id == "a" ? solpen::ManufacturedCase::case_a()
                               : solpen::ManufacturedCase::case_b(m0);
  cfg.t_end = f.t_end;
  cfg.cfl = f.cfl;
  cfg.blowup_threshold = f.threshold;
  cfg.order = f.order;
  cfg.validate();
  return cfg;
}

void echo_config(const CommonFlags& f, double m0) {
  std::printf("# penalty = %s\n", f.penalty.c_str());
  std::printf("# eta = %.17g\n", f.eta);
  std::printf("# cells = %d\n", f.cells);
  std::printf("# m0 = %.17g\n", m0);
  std::printf("# epsilon = %.17g\n", f.epsilon);
  std::printf("# t_end = %.17g\n", f.t_end);
  std::printf("# cfl = %.17g\n", f.cfl);
  std::printf("# threshold = %.17g\n", f.threshold);
  std::printf("# case = %s\n", f.case_id.c_str());
  std::printf("# order = %d\n", f.order);
  std::printf("# out = %s\n", f.out.c_str());
}

int run_single(const CommonFlags& f) {
  const solpen::RunConfig cfg = build_config(f);
  echo_config(f, cfg.penalty.m0);

  const solpen::RunResult result = solpen::run_simulation(cfg);
  solpen::write_snapshot_csv(result.field, cfg.mesh, result.t, f.out);
  std::printf("# t_final = %.17g steps = %ld\n", result.t, result.steps);

  if (result.blowup.blew_up) {
    std::fprintf(stderr,
                 "blow-up at t = %.17g (x_peak = %.17g, max |M| = %.17g); snapshot written to %s\n",
                 result.blowup.t_blowup, result.blowup.x_peak, result.blowup.peak_value,
                 f.out.c_str());
    return exit_blowup;
  }

  const solpen::ErrorReport err = solpen::l1_errors(result.field, cfg.mcase, result.t, cfg.mesh);
  std::printf("# l1_N = %.17g l1_dxN = %.17g l1_Gamma = %.17g l1_dxGamma = %.17g\n", err.l1_N,
              err.l1_dxN, err.l1_Gamma, err.l1_dxGamma);
  std::printf("snapshot written to %s\n", f.out.c_str());
  return exit_ok;
}

int run_blowup(const CommonFlags& f, std::vector<int> cells_list) {
  if (cells_list.empty()) cells_list.push_back(f.cells);

  CommonFlags base = f;
  base.cells = cells_list.front();
  const solpen::RunConfig cfg = build_config(base);
  echo_config(base, cfg.penalty.m0);

  std::vector<solpen::BlowupRow> rows;
  if (cells_list.size() == 1) {
    const solpen::RunResult result = solpen::run_simulation(cfg);
    rows.push_back({cells_list.front(), cfg.penalty.eta, result.blowup});
  } else {
    rows = solpen::blowup_refinement_study(cells_list, cfg);
  }

  solpen::write_blowup_csv(rows, f.out);
  for (const solpen::BlowupRow& row : rows) {
    if (row.report.blew_up)
      std::printf("J = %d: blow-up at t = %.17g, x_peak = %.17g, max |M| = %.17g\n", row.cells,
                  row.report.t_blowup, row.report.x_peak, row.report.peak_value);
    else
      std::printf("J = %d: no blow-up by t = %.17g (max |M| = %.17g)\n", row.cells,
                  row.report.t_blowup, row.report.peak_value);
  }
  std::printf("blow-up table written to %s\n", f.out.c_str());
  return exit_ok;
}

int run_converge(const CommonFlags& f, const std::vector<double>& etas) {
  if (parse_kind(f.penalty) == solpen::PenaltyKind::none)
    throw std::invalid_argument("--penalty none cannot drive a convergence sweep in eta");

  CommonFlags base = f;
  base.eta = etas.front();
  const solpen::RunConfig cfg = build_config(base);
  echo_config(base, cfg.penalty.m0);

  const solpen::ConvergenceResult result = solpen::convergence_study(etas, cfg);
  solpen::write_error_csv(result.reports, result.slopes, f.out);
  std::printf("# slope_N = %.15f slope_dxN = %.15f slope_Gamma = %.15f slope_dxGamma = %.15f\n",
              result.slopes.N, result.slopes.dxN, result.slopes.Gamma, result.slopes.dxGamma);
  std::printf("error table written to %s\n", f.out.c_str());
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-volume solver for the penalized 1D plasma transport system"};
  app.require_subcommand(1);

  CommonFlags run_flags, blowup_flags, conv_flags;
  std::vector<int> cells_list;
  std::vector<double> etas{1e-1, 1e-2, 1e-3, 1e-4};

  CLI::App* run_cmd = app.add_subcommand("run", "Single simulation, final snapshot to CSV");
  add_common_flags(*run_cmd, run_flags, "linear", 1e-5, 2000, 1.0, "b", "snapshot.csv");

  CLI::App* blowup_cmd =
      app.add_subcommand("blowup", "Blow-up study for the cut-flux penalization");
  add_common_flags(*blowup_cmd, blowup_flags, "isoardi", 1e-3, 1280, 1.0, "a", "blowup.csv");
  blowup_cmd->add_option("--cells-list", cells_list,
                         "Comma-separated resolutions for the refinement study")
      ->delimiter(',');

  CLI::App* conv_cmd = app.add_subcommand("converge", "Convergence sweep in eta, errors to CSV");
  add_common_flags(*conv_cmd, conv_flags, "linear", 1e-1, 2000, 1.0, "b", "errors.csv");
  conv_cmd->add_option("--etas", etas, "Comma-separated eta values, descending")
      ->delimiter(',')
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_config;
  }

  for (auto [cmd, flags] : {std::pair{run_cmd, &run_flags}, std::pair{blowup_cmd, &blowup_flags},
                            std::pair{conv_cmd, &conv_flags}}) {
    flags->m0_given = cmd->count("--m0") > 0;
    flags->epsilon_given = cmd->count("--epsilon") > 0;
  }

  try {
    if (run_cmd->parsed()) return run_single(run_flags);
    if (blowup_cmd->parsed()) return run_blowup(blowup_flags, cells_list);
    return run_converge(conv_flags, etas);
  } catch (const solpen::UnexpectedBlowup& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_blowup;
  } catch (const solpen::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_io;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return exit_config;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_config;
  }
}
