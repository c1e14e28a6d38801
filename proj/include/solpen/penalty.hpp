#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "solpen/field.hpp"
#include "solpen/mesh.hpp"

namespace solpen {

/// Penalty formulations for the limiter region:
///   isoardi      penalizes N and Gamma - M0*N and cuts the momentum flux
///                inside the obstacle
///   linear_gues  penalizes only Gamma/M0 - N (no boundary layer)
///   mach_gues    variant penalizing Gamma/N - M0
enum class PenaltyKind { none, isoardi, linear_gues, mach_gues };

const char* to_string(PenaltyKind kind);

struct PenaltyConfig {
  PenaltyKind kind = PenaltyKind::none;
  double eta = 1e-3;  // penalization parameter
  double m0 = 0.9;    // target Mach number inside the obstacle
  std::vector<std::uint8_t> mask;  // chi per cell: 1 inside the limiter

  /// chi_i = 1 iff the cell center lies at or beyond the limiter interface.
  static std::vector<std::uint8_t> build_mask(const Mesh1D& mesh);

  /// Validated constructor; throws std::invalid_argument on eta <= 0 or a
  /// Mach target outside (0, 1] (the linear/mach kinds require m0 < 1).
  static PenaltyConfig make(PenaltyKind kind, double eta, double m0, const Mesh1D& mesh);
};

/// Backward-Euler solve of the stiff penalty terms over dt, cell by cell.
/// Cells with chi = 0 are untouched; kind = none is the identity.
void apply_penalty_implicit(FieldArray& field, double dt, const PenaltyConfig& cfg);

}  // namespace solpen
