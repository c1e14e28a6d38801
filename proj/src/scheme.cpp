#include "solpen/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solpen {

void muscl_reconstruct(const FieldArray& field, const Mesh1D& mesh, int order,
                       InterfaceStates& faces) {
  const int n = field.n_cells();
  faces.resize(n + 1);

  // Primitive values for cells -2 .. n+1, slopes for cells -1 .. n.
  thread_local std::vector<PrimitiveState> prim;
  thread_local std::vector<PrimitiveState> slope;
  prim.resize(static_cast<std::size_t>(n) + 4);
  slope.resize(static_cast<std::size_t>(n) + 2);

  for (int i = -2; i <= n + 1; ++i) {
    const ConservativeState& u = field.cell(i);
    prim[static_cast<std::size_t>(i + 2)] = to_primitive({floor_density(u.N), u.Gamma});
  }

  if (order >= 2) {
    for (int i = -1; i <= n; ++i) {
      const PrimitiveState& pm = prim[static_cast<std::size_t>(i + 1)];
      const PrimitiveState& p0 = prim[static_cast<std::size_t>(i + 2)];
      const PrimitiveState& pp = prim[static_cast<std::size_t>(i + 3)];
      slope[static_cast<std::size_t>(i + 1)] = {minmod(p0.N - pm.N, pp.N - p0.N),
                                                minmod(p0.M - pm.M, pp.M - p0.M)};
    }
    // The limiter interface at face p separates two smooth solution branches
    // joined by a kink.  The two cells touching that face take one-sided
    // slopes from their own side (second-order biased estimates) so neither
    // reconstruction differences across the kink, which would otherwise smear
    // it into the plasma region.
    const int p = mesh.limiter_index;
    if (p >= 2 && p <= n - 2) {
      const std::size_t k = static_cast<std::size_t>(p);
      slope[k] = {1.5 * prim[k + 1].N - 2.0 * prim[k].N + 0.5 * prim[k - 1].N,
                  1.5 * prim[k + 1].M - 2.0 * prim[k].M + 0.5 * prim[k - 1].M};
      slope[k + 1] = {-1.5 * prim[k + 2].N + 2.0 * prim[k + 3].N - 0.5 * prim[k + 4].N,
                      -1.5 * prim[k + 2].M + 2.0 * prim[k + 3].M - 0.5 * prim[k + 4].M};
    } else if (p == 1 || p == n - 1) {
      const std::size_t k = static_cast<std::size_t>(p);
      slope[k] = {prim[k + 1].N - prim[k].N, prim[k + 1].M - prim[k].M};
      slope[k + 1] = {prim[k + 3].N - prim[k + 2].N, prim[k + 3].M - prim[k + 2].M};
    }
  } else {
    std::fill(slope.begin(), slope.end(), PrimitiveState{0.0, 0.0});
  }

  for (int f = 0; f <= n; ++f) {
    const PrimitiveState& pl = prim[static_cast<std::size_t>(f + 1)];
    const PrimitiveState& sl = slope[static_cast<std::size_t>(f)];
    const PrimitiveState& pr = prim[static_cast<std::size_t>(f + 2)];
    const PrimitiveState& sr = slope[static_cast<std::size_t>(f + 1)];
    faces.left[static_cast<std::size_t>(f)] = {floor_density(pl.N + 0.5 * sl.N), pl.M + 0.5 * sl.M};
    faces.right[static_cast<std::size_t>(f)] = {floor_density(pr.N - 0.5 * sr.N), pr.M - 0.5 * sr.M};
  }
}

Flux vfroe_ncv_flux(const PrimitiveState& yl, const PrimitiveState& yr) {
  if (yl.N <= 0.0 || yr.N <= 0.0)
    throw std::domain_error("vfroe_ncv_flux: non-positive density");

  const double n_hat = 0.5 * (yl.N + yr.N);
  const double m_hat = 0.5 * (yl.M + yr.M);

  PrimitiveState star;
  if (m_hat - 1.0 > 0.0) {
    star = yl;  // both waves move right
  } else if (m_hat + 1.0 < 0.0) {
    star = yr;  // both waves move left
  } else {
    // Subsonic: cross the (Mhat - 1)-wave only. The sampled state
    // Y_L + alpha1 (-Nhat, 1), with alpha1 = (dM - dN/Nhat)/2, simplifies to
    // the symmetric form below.
    const double dn = yr.N - yl.N;
    const double dm = yr.M - yl.M;
    star.N = n_hat - 0.5 * n_hat * dm;
    star.M = m_hat - 0.5 * dn / n_hat;
  }
  star.N = floor_density(star.N);
  return physical_flux(to_conservative(star));
}

Flux rusanov_flux(const PrimitiveState& yl, const PrimitiveState& yr) {
  const ConservativeState ul = to_conservative(yl);
  const ConservativeState ur = to_conservative(yr);
  const Flux fl = physical_flux(ul);
  const Flux fr = physical_flux(ur);
  const double s = std::max(std::abs(yl.M) + 1.0, std::abs(yr.M) + 1.0);
  return {0.5 * (fl.N + fr.N) - 0.5 * s * (ur.N - ul.N),
          0.5 * (fl.Gamma + fr.Gamma) - 0.5 * s * (ur.Gamma - ul.Gamma)};
}

Flux entropy_guard(const PrimitiveState& yl, const PrimitiveState& yr, Flux vfroe) {
  const auto [l1_l, l2_l] = eigenvalues(yl);
  const auto [l1_r, l2_r] = eigenvalues(yr);
  if (l1_l * l1_r < 0.0 || l2_l * l2_r < 0.0) return rusanov_flux(yl, yr);
  return vfroe;
}

Flux interface_flux(const PrimitiveState& yl, const PrimitiveState& yr) {
  return entropy_guard(yl, yr, vfroe_ncv_flux(yl, yr));
}

double compute_dt(const FieldArray& field, const Mesh1D& mesh, double cfl) {
  if (!(cfl > 0.0 && cfl < 1.0))
    throw std::invalid_argument("compute_dt: cfl must lie in (0, 1)");
  double smax = 1.0;
  for (const ConservativeState& u : field.interior())
    smax = std::max(smax, std::abs(u.Gamma / floor_density(u.N)) + 1.0);
  return cfl * mesh.dx / smax;
}

HeunStepper::HeunStepper(const Mesh1D& mesh, const BoundarySpec& bc, const PenaltyConfig& penalty,
                         const ManufacturedCase* mcase, bool with_sources, int order)
    : mesh_(mesh), bc_(bc), penalty_(penalty), mcase_(mcase), order_(order),
      stage_(mesh.n_cells) {
  bc_.validate();
  if (order_ != 1 && order_ != 2)
    throw std::invalid_argument("HeunStepper: order must be 1 or 2");
  if (penalty_.kind != PenaltyKind::none &&
      static_cast<int>(penalty_.mask.size()) != mesh_.n_cells)
    throw std::invalid_argument("HeunStepper: penalty mask does not match the mesh");
  if ((bc_.left == LeftBoundary::exact || bc_.right == RightBoundary::exact) && mcase_ == nullptr)
    throw std::invalid_argument("HeunStepper: exact boundary requires a manufactured case");
  if (with_sources) {
    if (mcase_ == nullptr)
      throw std::invalid_argument("HeunStepper: sources requested without a manufactured case");
    sources_.emplace(*mcase_, mesh_);
  }

  // Inside the limiter the manufactured sources are switched off for every
  // penalty kind (the equilibrium, not the manufactured solution, governs
  // there); the cut-cell kind additionally removes the momentum flux
  // difference of masked cells.
  src_open_.assign(static_cast<std::size_t>(mesh_.n_cells), 1.0);
  flux_open_.assign(static_cast<std::size_t>(mesh_.n_cells), 1.0);
  if (penalty_.kind != PenaltyKind::none)
    for (int i = 0; i < mesh_.n_cells; ++i)
      if (penalty_.mask[static_cast<std::size_t>(i)]) {
        src_open_[static_cast<std::size_t>(i)] = 0.0;
        if (penalty_.kind == PenaltyKind::isoardi)
          flux_open_[static_cast<std::size_t>(i)] = 0.0;
      }

  const std::size_t n = static_cast<std::size_t>(mesh_.n_cells);
  flux_.resize(n + 1);
  rate1_.resize(n);
  rate2_.resize(n);
}

void HeunStepper::stage_rates(FieldArray& field, double t, std::vector<ConservativeState>& rate) {
  fill_ghosts(field, bc_, mesh_, mcase_, t);
  muscl_reconstruct(field, mesh_, order_, faces_);

  const int n = mesh_.n_cells;
  for (int f = 0; f <= n; ++f) {
    const std::size_t k = static_cast<std::size_t>(f);
    flux_[k] = interface_flux(faces_.left[k], faces_.right[k]);
  }

  const double inv_dx = 1.0 / mesh_.dx;
  for (int i = 0; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    double rn = -(flux_[k + 1].N - flux_[k].N) * inv_dx;
    double rg = -flux_open_[k] * (flux_[k + 1].Gamma - flux_[k].Gamma) * inv_dx;
    if (sources_) {
      const SourcePair s = sources_->eval(t, i);
      rn += src_open_[k] * s.S_N;
      rg += src_open_[k] * s.S_Gamma;
    }
    rate[k] = {rn, rg};
  }
}

bool HeunStepper::step(FieldArray& field, double t, double dt) {
  const int n = mesh_.n_cells;

  stage_rates(field, t, rate1_);
  for (int i = 0; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    const ConservativeState& u = field.cell(i);
    stage_.cell(i) = {floor_density(u.N + dt * rate1_[k].N), u.Gamma + dt * rate1_[k].Gamma};
  }

  stage_rates(stage_, t + dt, rate2_);
  for (int i = 0; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    ConservativeState& u = field.cell(i);
    const ConservativeState& u1 = stage_.cell(i);
    u = {floor_density(0.5 * u.N + 0.5 * (u1.N + dt * rate2_[k].N)),
         0.5 * u.Gamma + 0.5 * (u1.Gamma + dt * rate2_[k].Gamma)};
  }

  apply_penalty_implicit(field, dt, penalty_);
  return field.interior_finite();
}

}  // namespace solpen
