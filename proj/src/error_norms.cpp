#include "solpen/error_norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solpen {

namespace {

/// Second-order derivative stencil on cell values f over the plasma block
/// 0..p-1: centered inside, one-sided at the two edges.
double stencil_dx(const std::vector<double>& f, int i, int p, double dx) {
  if (i == 0) return (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dx);
  if (i == p - 1)
    return (3.0 * f[static_cast<std::size_t>(p - 1)] - 4.0 * f[static_cast<std::size_t>(p - 2)] +
            f[static_cast<std::size_t>(p - 3)]) /
           (2.0 * dx);
  return (f[static_cast<std::size_t>(i + 1)] - f[static_cast<std::size_t>(i - 1)]) / (2.0 * dx);
}

}  // namespace

ErrorReport l1_errors(const FieldArray& field, const ManufacturedCase& mcase, double t,
                      const Mesh1D& mesh) {
  const int p = mesh.plasma_cells();
  if (p < 3) throw std::invalid_argument("l1_errors: needs at least three plasma cells");
  if (field.n_cells() != mesh.n_cells)
    throw std::invalid_argument("l1_errors: field does not match the mesh");

  std::vector<double> n_num(static_cast<std::size_t>(p));
  std::vector<double> g_num(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    n_num[static_cast<std::size_t>(i)] = field.cell(i).N;
    g_num[static_cast<std::size_t>(i)] = field.cell(i).Gamma;
  }

  ErrorReport r;
  for (int i = 0; i < p; ++i) {
    const double x = mesh.center(i);
    r.l1_N += std::abs(n_num[static_cast<std::size_t>(i)] - mcase.n_exact(t, x));
    r.l1_Gamma += std::abs(g_num[static_cast<std::size_t>(i)] - mcase.gamma_exact(t, x));
    r.l1_dxN += std::abs(stencil_dx(n_num, i, p, mesh.dx) - mcase.dx_n_exact(t, x));
    r.l1_dxGamma += std::abs(stencil_dx(g_num, i, p, mesh.dx) - mcase.dx_gamma_exact(t, x));
  }
  r.l1_N *= mesh.dx;
  r.l1_Gamma *= mesh.dx;
  r.l1_dxN *= mesh.dx;
  r.l1_dxGamma *= mesh.dx;
  return r;
}

double linf_error(const FieldArray& field, const ManufacturedCase& mcase, double t,
                  const Mesh1D& mesh) {
  double worst = 0.0;
  for (int i = 0; i < mesh.plasma_cells(); ++i) {
    const double x = mesh.center(i);
    worst = std::max(worst, std::abs(field.cell(i).N - mcase.n_exact(t, x)));
    worst = std::max(worst, std::abs(field.cell(i).Gamma - mcase.gamma_exact(t, x)));
  }
  return worst;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: needs >= 2 paired points");

  const std::size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0)) throw std::invalid_argument("fit_loglog_slope: x must be positive");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(std::max(y[i], 1e-300));
  }

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_loglog_slope: x values are all equal");
  return sxy / sxx;
}

SlopeFit fit_slopes(const std::vector<ErrorReport>& reports) {
  std::vector<double> etas(reports.size());
  std::vector<double> e(reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) etas[i] = reports[i].eta;

  SlopeFit fit;
  const auto slope_of = [&](double ErrorReport::*member) {
    for (std::size_t i = 0; i < reports.size(); ++i) e[i] = reports[i].*member;
    return fit_loglog_slope(etas, e);
  };
  fit.N = slope_of(&ErrorReport::l1_N);
  fit.dxN = slope_of(&ErrorReport::l1_dxN);
  fit.Gamma = slope_of(&ErrorReport::l1_Gamma);
  fit.dxGamma = slope_of(&ErrorReport::l1_dxGamma);
  return fit;
}

}  // namespace solpen
