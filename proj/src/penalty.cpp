#include "solpen/penalty.hpp"

#include <stdexcept>

namespace solpen {

const char* to_string(PenaltyKind kind) {
  switch (kind) {
    case PenaltyKind::none: return "none";
    case PenaltyKind::isoardi: return "isoardi";
    case PenaltyKind::linear_gues: return "linear";
    case PenaltyKind::mach_gues: return "mach";
  }
  return "?";
}

std::vector<std::uint8_t> PenaltyConfig::build_mask(const Mesh1D& mesh) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(mesh.n_cells), 0);
  for (int i = mesh.limiter_index; i < mesh.n_cells; ++i) mask[static_cast<std::size_t>(i)] = 1;
  return mask;
}

PenaltyConfig PenaltyConfig::make(PenaltyKind kind, double eta, double m0, const Mesh1D& mesh) {
  PenaltyConfig cfg;
  cfg.kind = kind;
  cfg.eta = eta;
  cfg.m0 = m0;
  if (kind == PenaltyKind::none) return cfg;

  if (!(eta > 0.0)) throw std::invalid_argument("PenaltyConfig: eta must be positive");
  if (!(m0 > 0.0) || !(m0 <= 1.0))
    throw std::invalid_argument("PenaltyConfig: M0 must lie in (0, 1]");
  if (m0 == 1.0 && kind != PenaltyKind::isoardi)
    throw std::invalid_argument("PenaltyConfig: M0 = 1 is only meaningful for the isoardi kind");
  cfg.mask = build_mask(mesh);
  return cfg;
}

void apply_penalty_implicit(FieldArray& field, double dt, const PenaltyConfig& cfg) {
  if (cfg.kind == PenaltyKind::none) return;
  if (!(cfg.eta > 0.0)) throw std::invalid_argument("apply_penalty_implicit: eta must be positive");
  if (static_cast<int>(cfg.mask.size()) != field.n_cells())
    throw std::invalid_argument("apply_penalty_implicit: mask does not match the field");

  const double r = dt / cfg.eta;
  for (int i = 0; i < field.n_cells(); ++i) {
    if (!cfg.mask[static_cast<std::size_t>(i)]) continue;
    ConservativeState& u = field.cell(i);
    switch (cfg.kind) {
      case PenaltyKind::isoardi: {
        // dN/dt = -N/eta, then dGamma/dt = -(Gamma - M0 N)/eta; the coupling
        // is triangular so N is solved first.
        const double n_new = u.N / (1.0 + r);
        u.N = n_new;
        u.Gamma = (u.Gamma + r * cfg.m0 * n_new) / (1.0 + r);
        break;
      }
      case PenaltyKind::linear_gues:
        // dGamma/dt = -(Gamma/M0 - N)/eta with N untouched.
        u.Gamma = (u.Gamma + r * u.N) / (1.0 + r / cfg.m0);
        break;
      case PenaltyKind::mach_gues:
        // dGamma/dt = -(Gamma/N - M0)/eta, linear in Gamma for frozen N.
        // A collapsed density would make the relaxation rate 1/(eta N)
        // explode, so such cells use the linear_gues form instead.
        if (u.N <= n_floor) {
          u.Gamma = (u.Gamma + r * u.N) / (1.0 + r / cfg.m0);
        } else {
          u.Gamma = (u.Gamma + r * cfg.m0) / (1.0 + r / u.N);
        }
        break;
      case PenaltyKind::none: break;
    }
  }
}

}  // namespace solpen
