#include "solpen/manufactured.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace solpen {

namespace {

constexpr double gauss_width = 0.16;                    // denominator scale in the exponent
constexpr double wave_number = std::numbers::pi / 0.8;  // argument scale of sin(pi x / 0.8)

// Shared evaluation kernel so the pointwise API and the cached SourceTable
// produce bit-identical values. s = sin(kx), c = cos(kx), x2 = x^2.
inline SourcePair source_kernel(double t, double x, double x2, double s, double c, double m0) {
  const double tau = gauss_width * (t + 1.0);
  const double env = std::exp(-x2 / tau);
  const double dt_env = env * x2 * gauss_width / (tau * tau);
  const double dx_log = 2.0 * x / tau;  // -dx(env)/env

  const double s_n = dt_env + m0 * env * (wave_number * c - dx_log * s);
  const double s_gamma = m0 * s * dt_env +
                         env * (2.0 * wave_number * m0 * m0 * s * c - dx_log * (m0 * m0 * s * s + 1.0));
  return {s_n, s_gamma};
}

}  // namespace

ManufacturedCase::ManufacturedCase(std::string id, double m0) : id_(std::move(id)), m0_(m0) {}

ManufacturedCase ManufacturedCase::case_a() { return ManufacturedCase("case-a", 1.0); }

ManufacturedCase ManufacturedCase::case_b(double m0) {
  if (!(m0 > 0.0) || !(m0 <= 1.0))
    throw std::invalid_argument("ManufacturedCase: Mach amplitude must lie in (0, 1]");
  return ManufacturedCase("case-b", m0);
}

double ManufacturedCase::n_exact(double t, double x) const {
  return std::exp(-x * x / (gauss_width * (t + 1.0)));
}

double ManufacturedCase::gamma_exact(double t, double x) const {
  return m0_ * std::sin(wave_number * x) * n_exact(t, x);
}

ConservativeState ManufacturedCase::exact(double t, double x) const {
  const double n = n_exact(t, x);
  return {n, m0_ * std::sin(wave_number * x) * n};
}

double ManufacturedCase::dx_n_exact(double t, double x) const {
  const double tau = gauss_width * (t + 1.0);
  return -2.0 * x / tau * n_exact(t, x);
}

double ManufacturedCase::dx_gamma_exact(double t, double x) const {
  const double tau = gauss_width * (t + 1.0);
  const double env = n_exact(t, x);
  return m0_ * env * (wave_number * std::cos(wave_number * x) - 2.0 * x / tau * std::sin(wave_number * x));
}

SourcePair ManufacturedCase::sources(double t, double x) const {
  return source_kernel(t, x, x * x, std::sin(wave_number * x), std::cos(wave_number * x), m0_);
}

SourceTable::SourceTable(const ManufacturedCase& mcase, const Mesh1D& mesh)
    : m0_(mcase.mach_amplitude()) {
  const int n = mesh.n_cells;
  x_.resize(n);
  x2_.resize(n);
  sin_kx_.resize(n);
  cos_kx_.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = mesh.center(i);
    x_[i] = x;
    x2_[i] = x * x;
    sin_kx_[i] = std::sin(wave_number * x);
    cos_kx_[i] = std::cos(wave_number * x);
  }
}

SourcePair SourceTable::eval(double t, int cell) const {
  return source_kernel(t, x_[cell], x2_[cell], sin_kx_[cell], cos_kx_[cell], m0_);
}

}  // namespace solpen
