#pragma once

#include <optional>
#include <vector>

#include "solpen/boundary.hpp"
#include "solpen/field.hpp"
#include "solpen/manufactured.hpp"
#include "solpen/mesh.hpp"
#include "solpen/model.hpp"
#include "solpen/penalty.hpp"

namespace solpen {

/// Slope limiter: 0 on a sign change, else the smaller-magnitude argument.
inline double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

/// Reconstructed primitive states on both sides of every face f = 0..n_cells.
/// left[f] belongs to cell f-1, right[f] to cell f.
struct InterfaceStates {
  std::vector<PrimitiveState> left;
  std::vector<PrimitiveState> right;

  void resize(int n_faces) {
    left.resize(static_cast<std::size_t>(n_faces));
    right.resize(static_cast<std::size_t>(n_faces));
  }
};

/// Piecewise-linear reconstruction of (N, M) with minmod-limited slopes;
/// order = 1 uses zero slopes. Face densities are re-floored. Ghost cells
/// must be filled.
void muscl_reconstruct(const FieldArray& field, const Mesh1D& mesh, int order,
                       InterfaceStates& faces);

/// Linearized Riemann solver in the non-conservative variables (N, M): the
/// jump is decomposed on the eigenvectors of B(Yhat) = [[M, N], [1/N, M]] at
/// the arithmetic average Yhat, the fan is sampled at x/t = 0, and the
/// physical flux is evaluated at the sampled state.
Flux vfroe_ncv_flux(const PrimitiveState& yl, const PrimitiveState& yr);

/// F = (F(U_L) + F(U_R))/2 - s (U_R - U_L)/2 with s = max(|M_L|+1, |M_R|+1).
Flux rusanov_flux(const PrimitiveState& yl, const PrimitiveState& yr);

/// Replaces the VFRoe flux by the Rusanov flux when an eigenvalue changes
/// sign across the face (sonic rarefaction guard).
Flux entropy_guard(const PrimitiveState& yl, const PrimitiveState& yr, Flux vfroe);

/// vfroe_ncv_flux followed by entropy_guard.
Flux interface_flux(const PrimitiveState& yl, const PrimitiveState& yr);

/// dt = cfl * dx / max_i(|M_i| + 1) over the interior cells.
double compute_dt(const FieldArray& field, const Mesh1D& mesh, double cfl);

/// Heun (TVD RK2) transport step with Godunov-split implicit penalty:
/// two explicit stages of flux differences plus source terms, then one
/// backward-Euler penalty solve over the full dt. Source terms act on the
/// plasma only: a masked cell's sources carry the factor (1 - chi_i). Under
/// the isoardi kind the momentum flux difference of a masked cell is cut by
/// the same factor.
class HeunStepper {
 public:
  /// mcase supplies the manufactured source terms (disabled when
  /// with_sources is false) and the data for `exact` boundaries; it may be
  /// null when neither is needed.
  HeunStepper(const Mesh1D& mesh, const BoundarySpec& bc, const PenaltyConfig& penalty,
              const ManufacturedCase* mcase, bool with_sources, int order);

  /// Advances the field by one full step in place. Returns false when the
  /// updated field contains a non-finite value (blow-up signal).
  bool step(FieldArray& field, double t, double dt);

  const Mesh1D& mesh() const { return mesh_; }

 private:
  void stage_rates(FieldArray& field, double t, std::vector<ConservativeState>& rate);

  Mesh1D mesh_;
  BoundarySpec bc_;
  PenaltyConfig penalty_;
  const ManufacturedCase* mcase_;
  int order_;
  std::optional<SourceTable> sources_;
  std::vector<double> src_open_;   // 1 - chi_i: sources act on the plasma only
  std::vector<double> flux_open_;  // 1 - chi_i under isoardi, otherwise all ones
  InterfaceStates faces_;
  std::vector<Flux> flux_;
  std::vector<ConservativeState> rate1_, rate2_;
  FieldArray stage_;
};

}  // namespace solpen
