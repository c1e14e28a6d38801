#pragma once

#include <string>
#include <vector>

#include "solpen/mesh.hpp"
#include "solpen/model.hpp"

namespace solpen {

struct SourcePair {
  double S_N = 0.0;
  double S_Gamma = 0.0;
};

/// Closed-form test solution of the transport system together with the
/// source terms that make it exact:
///   N(t,x)     = exp(-x^2 / (0.16 (t+1)))
///   Gamma(t,x) = m0 sin(pi x / 0.8) N(t,x)
/// Case A is the m0 = 1 family, case B carries a Mach amplitude m0 in (0,1]
/// matched to the penalty target. N is even in x and Gamma odd, so the family
/// is compatible with a symmetry condition at x = 0.
class ManufacturedCase {
 public:
  static ManufacturedCase case_a();
  static ManufacturedCase case_b(double m0);

  const std::string& id() const { return id_; }
  double mach_amplitude() const { return m0_; }

  ConservativeState exact(double t, double x) const;
  double n_exact(double t, double x) const;
  double gamma_exact(double t, double x) const;
  double dx_n_exact(double t, double x) const;
  double dx_gamma_exact(double t, double x) const;

  /// Source terms S_N = dt N + dx Gamma and
  /// S_Gamma = dt Gamma + dx(Gamma^2/N + N), as hand-derived closed forms.
  SourcePair sources(double t, double x) const;

 private:
  ManufacturedCase(std::string id, double m0);

  std::string id_;
  double m0_;
};

/// Per-mesh cache of the x-dependent factors of the source terms, for the
/// time-stepping inner loop. eval(t, i) is exactly sources(t, center(i)).
class SourceTable {
 public:
  SourceTable(const ManufacturedCase& mcase, const Mesh1D& mesh);

  SourcePair eval(double t, int cell) const;

 private:
  double m0_;
  std::vector<double> x_;
  std::vector<double> x2_;
  std::vector<double> sin_kx_;
  std::vector<double> cos_kx_;
};

}  // namespace solpen
