#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace solpen {

/// Density floor applied before any division by N.
inline constexpr double n_floor = 1e-12;

/// Conserved pair: particle density and particle flux.
struct ConservativeState {
  double N = 0.0;
  double Gamma = 0.0;
};

/// Non-conservative pair used by the linearized Riemann solver:
/// density and Mach number M = Gamma / N.
struct PrimitiveState {
  double N = 0.0;
  double M = 0.0;
};

/// Interface flux components for the two conservation laws.
struct Flux {
  double N = 0.0;
  double Gamma = 0.0;
};

/// Clamp a density to the positivity floor. NaN passes through so that
/// a corrupted field is caught by the finiteness checks, not hidden.
inline double floor_density(double n) { return n < n_floor ? n_floor : n; }

inline PrimitiveState to_primitive(const ConservativeState& u) {
  if (u.N <= 0.0) throw std::domain_error("to_primitive: non-positive density");
  return {u.N, u.Gamma / u.N};
}

inline ConservativeState to_conservative(const PrimitiveState& p) {
  return {p.N, p.N * p.M};
}

/// F(U) = (Gamma, Gamma^2/N + N); the isothermal pressure law p = N is built in.
inline Flux physical_flux(const ConservativeState& u) {
  if (u.N <= 0.0) throw std::domain_error("physical_flux: non-positive density");
  return {u.Gamma, u.Gamma * u.Gamma / u.N + u.N};
}

/// Eigenvalues of the flux Jacobian, ascending: (M - 1, M + 1).
inline std::pair<double, double> eigenvalues(const PrimitiveState& p) {
  return {p.M - 1.0, p.M + 1.0};
}

}  // namespace solpen
