#pragma once

#include "solpen/field.hpp"
#include "solpen/manufactured.hpp"
#include "solpen/mesh.hpp"

namespace solpen {

enum class LeftBoundary { symmetry, dirichlet_mach, periodic, exact };
enum class RightBoundary { dirichlet_mach, transparent, periodic, exact };

/// Ghost-cell policy for the two domain ends.
///   symmetry       mirrors N and anti-mirrors Gamma about x_min (N even, Gamma odd)
///   dirichlet_mach extrapolates N (zeroth order) and sets Gamma = M_val * N,
///                  imposing the Mach number weakly at the face
///   transparent    zeroth-order outflow extrapolation of both fields
///   periodic       wrap-around copy (both sides must be periodic)
///   exact          ghosts take the manufactured solution at the ghost centers
///                  (verification runs)
struct BoundarySpec {
  LeftBoundary left = LeftBoundary::symmetry;
  RightBoundary right = RightBoundary::transparent;
  double epsilon = 0.1;      // Mach gap from sonic used for the default Dirichlet data
  double left_mach = -0.9;   // imposed M at x_min when left = dirichlet_mach
  double right_mach = 0.9;   // imposed M at x_max when right = dirichlet_mach

  /// Throws std::invalid_argument on one-sided periodicity or sonic
  /// (|M_val| >= 1) Dirichlet data.
  void validate() const;
};

/// Refresh the two ghost layers on each side. mcase may be null unless an
/// `exact` boundary is requested.
void fill_ghosts(FieldArray& field, const BoundarySpec& spec, const Mesh1D& mesh,
                 const ManufacturedCase* mcase, double t);

}  // namespace solpen
