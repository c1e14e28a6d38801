#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "solpen/manufactured.hpp"
#include "solpen/mesh.hpp"
#include "solpen/model.hpp"

using namespace solpen;

TEST_CASE("physical_flux closed form") {
  CHECK(physical_flux({1.0, 0.0}).N == 0.0);
  CHECK(physical_flux({1.0, 0.0}).Gamma == 1.0);
  CHECK(physical_flux({1.0, 1.0}).N == 1.0);
  CHECK(physical_flux({1.0, 1.0}).Gamma == 2.0);
  CHECK(physical_flux({2.0, 1.0}).N == 1.0);
  CHECK(physical_flux({2.0, 1.0}).Gamma == 2.5);
  CHECK_THROWS_AS(physical_flux({0.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(physical_flux({-1.0, 1.0}), std::domain_error);
}

TEST_CASE("eigenvalues are M -+ 1") {
  CHECK(eigenvalues({1.0, 1.0}) == std::pair{0.0, 2.0});
  CHECK(eigenvalues({1.0, 0.0}) == std::pair{-1.0, 1.0});
  CHECK(eigenvalues({1.0, -1.5}) == std::pair{-2.5, -0.5});

  std::mt19937 rng(7);
  // Exact spacing is provable for the subsonic-to-sonic range; beyond it the
  // two roundings can land one ulp apart (e.g. M = 4.1).
  std::uniform_real_distribution<double> subsonic(-1.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const auto [l1, l2] = eigenvalues({1.0, subsonic(rng)});
    CHECK(l2 - l1 == 2.0);
  }
  std::uniform_real_distribution<double> wide(-10.0, 10.0);
  for (int k = 0; k < 100; ++k) {
    const auto [l1, l2] = eigenvalues({1.0, wide(rng)});
    CHECK(l2 - l1 == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("primitive conversions") {
  const PrimitiveState p0 = to_primitive({1.0, 0.0});
  CHECK(p0.N == 1.0);
  CHECK(p0.M == 0.0);
  const PrimitiveState p1 = to_primitive({2.0, 1.0});
  CHECK(p1.N == 2.0);
  CHECK(p1.M == 0.5);

  const PrimitiveState back = to_primitive(to_conservative({0.37, 0.9}));
  CHECK(back.N == 0.37);
  CHECK(back.M == doctest::Approx(0.9).epsilon(1e-15));

  CHECK_THROWS_AS(to_primitive({0.0, 1.0}), std::domain_error);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> nd(0.1, 3.0), md(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    const PrimitiveState p{nd(rng), md(rng)};
    CHECK(physical_flux(to_conservative(p)).N == p.N * p.M);
  }
}

TEST_CASE("floor_density clamps but lets NaN through") {
  CHECK(floor_density(0.5) == 0.5);
  CHECK(floor_density(0.0) == n_floor);
  CHECK(floor_density(-1.0) == n_floor);
  CHECK(floor_density(1e-13) == n_floor);
  CHECK(std::isnan(floor_density(std::nan(""))));
}

TEST_CASE("mesh construction and limiter alignment") {
  const Mesh1D m5 = Mesh1D::make(0.0, 0.5, 5, 0.4);
  CHECK(m5.dx == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(m5.limiter_index == 4);
  CHECK(m5.plasma_cells() == 4);
  CHECK(m5.center(0) == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(m5.face(4) == doctest::Approx(0.4).epsilon(1e-15));

  const Mesh1D m10 = Mesh1D::make(0.0, 0.5, 10, 0.4);
  CHECK(m10.limiter_index == 8);

  const Mesh1D m1280 = Mesh1D::make(0.0, 0.5, 1280, 0.4);
  CHECK(m1280.limiter_index == 1024);
  CHECK(m1280.n_cells - m1280.limiter_index == 256);

  // Interface on a face only.
  CHECK_THROWS_AS(Mesh1D::make(0.0, 0.5, 10, 0.43), std::invalid_argument);
  CHECK_THROWS_AS(Mesh1D::make(0.0, 0.5, 3, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(Mesh1D::make(0.5, 0.0, 10, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(Mesh1D::make(0.0, 0.5, 10, 0.6), std::invalid_argument);

  // limiter_start == x_max: no obstacle cells.
  const Mesh1D all_plasma = Mesh1D::make(0.0, 0.4, 8, 0.4);
  CHECK(all_plasma.plasma_cells() == 8);
}

TEST_CASE("manufactured exact values") {
  const ManufacturedCase b = ManufacturedCase::case_b(0.9);
  CHECK(b.id() == "case-b");
  CHECK(b.mach_amplitude() == 0.9);

  const ConservativeState origin = b.exact(0.0, 0.0);
  CHECK(origin.N == 1.0);
  CHECK(origin.Gamma == 0.0);

  const ConservativeState edge = b.exact(0.0, 0.4);
  CHECK(edge.N == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(edge.Gamma == doctest::Approx(0.9 * std::exp(-1.0)).epsilon(1e-14));

  const ManufacturedCase a = ManufacturedCase::case_a();
  CHECK(a.id() == "case-a");
  const ConservativeState late = a.exact(1.0, 0.4);
  CHECK(late.N == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(late.Gamma == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));

  CHECK_THROWS_AS(ManufacturedCase::case_b(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ManufacturedCase::case_b(1.5), std::invalid_argument);
  CHECK_THROWS_AS(ManufacturedCase::case_b(-0.2), std::invalid_argument);
}

TEST_CASE("manufactured parity: N even, Gamma odd") {
  const ManufacturedCase b = ManufacturedCase::case_b(0.7);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> td(0.0, 1.0), xd(0.0, 0.5);
  for (int k = 0; k < 50; ++k) {
    const double t = td(rng), x = xd(rng);
    CHECK(b.n_exact(t, -x) == doctest::Approx(b.n_exact(t, x)).epsilon(1e-15));
    CHECK(b.gamma_exact(t, -x) == doctest::Approx(-b.gamma_exact(t, x)).epsilon(1e-15));
  }
}

TEST_CASE("source terms at the origin") {
  const double k = std::numbers::pi / 0.8;
  const SourcePair sa = ManufacturedCase::case_a().sources(0.0, 0.0);
  CHECK(sa.S_N == doctest::Approx(k).epsilon(1e-15));
  CHECK(sa.S_Gamma == doctest::Approx(0.0).epsilon(1e-15));

  const SourcePair sb = ManufacturedCase::case_b(0.9).sources(0.0, 0.0);
  CHECK(sb.S_N == doctest::Approx(0.9 * k).epsilon(1e-15));
  CHECK(sb.S_Gamma == doctest::Approx(0.0).epsilon(1e-15));
}

namespace {

/// Residual of the exact solution in the transport system with the analytic
/// sources, via centered finite differences of the exact fields.
std::pair<double, double> fd_residual(const ManufacturedCase& c, double t, double x) {
  const double h = 1e-6;
  const auto n = [&](double tt, double xx) { return c.n_exact(tt, xx); };
  const auto g = [&](double tt, double xx) { return c.gamma_exact(tt, xx); };
  const auto fg = [&](double tt, double xx) {
    const double nn = c.n_exact(tt, xx);
    const double gg = c.gamma_exact(tt, xx);
    return gg * gg / nn + nn;
  };

  const double dt_n = (n(t + h, x) - n(t - h, x)) / (2.0 * h);
  const double dx_g = (g(t, x + h) - g(t, x - h)) / (2.0 * h);
  const double dt_g = (g(t + h, x) - g(t - h, x)) / (2.0 * h);
  const double dx_f = (fg(t, x + h) - fg(t, x - h)) / (2.0 * h);

  const SourcePair s = c.sources(t, x);
  return {dt_n + dx_g - s.S_N, dt_g + dx_f - s.S_Gamma};
}

}  // namespace

TEST_CASE("source terms satisfy the system to finite-difference accuracy") {
  const ManufacturedCase cases[] = {ManufacturedCase::case_a(), ManufacturedCase::case_b(0.9)};
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> td(0.001, 1.0), xd(0.0, 0.5);
  for (const ManufacturedCase& c : cases) {
    for (int k = 0; k < 100; ++k) {
      const auto [r_n, r_g] = fd_residual(c, td(rng), xd(rng));
      CHECK(std::abs(r_n) <= 1e-6);
      CHECK(std::abs(r_g) <= 1e-6);
    }
  }
}

TEST_CASE("analytic spatial derivatives match finite differences") {
  const ManufacturedCase b = ManufacturedCase::case_b(0.8);
  const double h = 1e-6;
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> td(0.0, 1.0), xd(0.0, 0.5);
  for (int k = 0; k < 50; ++k) {
    const double t = td(rng), x = xd(rng);
    const double fd_n = (b.n_exact(t, x + h) - b.n_exact(t, x - h)) / (2.0 * h);
    const double fd_g = (b.gamma_exact(t, x + h) - b.gamma_exact(t, x - h)) / (2.0 * h);
    CHECK(b.dx_n_exact(t, x) == doctest::Approx(fd_n).epsilon(1e-8));
    CHECK(b.dx_gamma_exact(t, x) == doctest::Approx(fd_g).epsilon(1e-8));
  }
}

TEST_CASE("source table reproduces the pointwise sources exactly") {
  const ManufacturedCase b = ManufacturedCase::case_b(0.9);
  const Mesh1D mesh = Mesh1D::make(0.0, 0.5, 40, 0.4);
  const SourceTable table(b, mesh);
  for (double t : {0.0, 0.123, 0.77, 1.0}) {
    for (int i = 0; i < mesh.n_cells; ++i) {
      const SourcePair direct = b.sources(t, mesh.center(i));
      const SourcePair cached = table.eval(t, i);
      CHECK(cached.S_N == direct.S_N);
      CHECK(cached.S_Gamma == direct.S_Gamma);
    }
  }
}
