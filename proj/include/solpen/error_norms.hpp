#pragma once

#include <vector>

#include "solpen/field.hpp"
#include "solpen/manufactured.hpp"
#include "solpen/mesh.hpp"

namespace solpen {

/// L1 norms over the plasma region of the deviation from the exact solution,
/// for both fields and their spatial derivatives.
struct ErrorReport {
  double eta = 0.0;  // filled by the sweep driver
  double l1_N = 0.0;
  double l1_dxN = 0.0;
  double l1_Gamma = 0.0;
  double l1_dxGamma = 0.0;
};

/// Errors restricted to cells with center < limiter_start:
/// l1_u = sum dx |u_i - u_exact(t, x_i)|. Derivative errors difference the
/// numerical field (centered stencil, one-sided second-order at the region's
/// two edge cells) against the analytic exact derivative. Needs at least
/// three plasma cells.
ErrorReport l1_errors(const FieldArray& field, const ManufacturedCase& mcase, double t,
                      const Mesh1D& mesh);

/// max over plasma cells of |N - N_exact| and |Gamma - Gamma_exact| combined.
double linf_error(const FieldArray& field, const ManufacturedCase& mcase, double t,
                  const Mesh1D& mesh);

/// Least-squares slope of log(y) against log(x). Values are clamped to
/// 1e-300 before taking logs. Needs >= 2 points with distinct x.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct SlopeFit {
  double N = 0.0;
  double dxN = 0.0;
  double Gamma = 0.0;
  double dxGamma = 0.0;
};

/// Per-quantity log-log slopes of the error reports against their eta.
SlopeFit fit_slopes(const std::vector<ErrorReport>& reports);

}  // namespace solpen
