#include <cmath>

#include "doctest.h"
#include "solpen/boundary.hpp"
#include "solpen/scheme.hpp"
#include "solpen/simulation.hpp"

using namespace solpen;

namespace {

FieldArray small_field(const Mesh1D& mesh) {
  FieldArray f(mesh.n_cells);
  for (int i = 0; i < mesh.n_cells; ++i) f.cell(i) = {1.0 + 0.1 * i, 0.2 * (i + 1)};
  return f;
}

}  // namespace

TEST_CASE("symmetry ghosts: N mirrored, Gamma anti-mirrored") {
  const Mesh1D mesh = Mesh1D::make(0.0, 0.5, 10, 0.4);
  FieldArray f(mesh.n_cells);
  f.cell(0) = {1.0, 0.2};
  f.cell(1) = {2.0, 0.4};
  for (int i = 2; i < 10; ++i) f.cell(i) = {1.0, 0.0};

  BoundarySpec spec;
  spec.left = LeftBoundary::symmetry;
  spec.right = RightBoundary::transparent;
  fill_ghosts(f, spec, mesh, nullptr, 0.0);

  CHECK(f.cell(-1).N == 1.0);
  CHECK(f.cell(-1).Gamma == -0.2);
  CHECK(f.cell(-2).N == 2.0);
  CHECK(f.cell(-2).Gamma == -0.4);
}

TEST_CASE("transparent ghosts copy the edge cell") {
  const Mesh1D mesh = Mesh1D::make(0.0, 0.5, 10, 0.4);
  FieldArray f(mesh.n_cells);
  for (int i = 0; i < 10; ++i) f.cell(i) = {0.7, 0.21};

  BoundarySpec spec;
  fill_ghosts(f, spec, mesh, nullptr, 0.0);
  CHECK(f.cell(10).N == 0.7);
  CHECK(f.cell(10).Gamma == 0.21);
  CHECK(f.cell(11).N == 0.7);
  CHECK(f.cell(11).Gamma == 0.21);
}

TEST_CASE("transparent boundary passes the physical flux of a constant state") {
  const Mesh1D mesh = Mesh1D::make(0.0, 0.5, 10, 0.4);
  FieldArray f(mesh.n_cells);
  const ConservativeState u{0.8, 0.3};
  for (int i = 0; i < 10; ++i) f.cell(i) = u;

  BoundarySpec spec;
  fill_ghosts(f, spec, mesh, nullptr, 0.0);
  InterfaceStates faces;
  muscl_reconstruct(f, mesh, 2, faces);
  const Flux at_right = interface_flux(faces.left[10], faces.right[10]);
  const Flux expected = physical_flux(u);
  CHECK(at_right.N == expected.N);
  CHECK(at_right.Gamma == expected.Gamma);
}

TEST_CASE("dirichlet-mach ghosts extrapolate N and impose Gamma = M N") {
  const Mesh1D mesh = Mesh1D::make(0.0, 0.5, 10, 0.4);
  FieldArray f = small_field(mesh);
  f.cell(9) = {0.5, 0.1};

  BoundarySpec spec;
  spec.right = RightBoundary::dirichlet_mach;
  spec.right_mach = 0.9;
  fill_ghosts(f, spec, mesh, nullptr, 0.0);
  CHECK(f.cell(10).N == 0.5);
  CHECK(f.cell(10).Gamma == doctest::Approx(0.45).epsilon(1e-15));
  CHECK(f.cell(11).N == f.cell(10).N);
  CHECK(f.cell(11).Gamma == f.cell(10).Gamma);

  spec.left = LeftBoundary::dirichlet_mach;
  spec.left_mach = -0.9;
  fill_ghosts(f, spec, mesh, nullptr, 0.0);
  CHECK(f.cell(-1).N == f.cell(0).N);
  CHECK(f.cell(-1).Gamma == doctest::Approx(-0.9 * f.cell(0).N).epsilon(1e-15));
}

TEST_CASE("periodic ghosts wrap") {
  const Mesh1D mesh = Mesh1D::make(0.0, 0.5, 10, 0.5);
  FieldArray f = small_field(mesh);

  BoundarySpec spec;
  spec.left = LeftBoundary::periodic;
  spec.right = RightBoundary::periodic;
  fill_ghosts(f, spec, mesh, nullptr, 0.0);
  CHECK(f.cell(-1).N == f.cell(9).N);
  CHECK(f.cell(-2).N == f.cell(8).N);
  CHECK(f.cell(10).Gamma == f.cell(0).Gamma);
  CHECK(f.cell(11).Gamma == f.cell(1).Gamma);
}

TEST_CASE("exact ghosts sample the manufactured solution at ghost centers") {
  const Mesh1D mesh = Mesh1D::make(0.0, 0.4, 8, 0.4);
  FieldArray f = small_field(mesh);
  const ManufacturedCase b = ManufacturedCase::case_b(0.9);

  BoundarySpec spec;
  spec.left = LeftBoundary::exact;
  spec.right = RightBoundary::exact;
  fill_ghosts(f, spec, mesh, &b, 0.3);

  CHECK(f.cell(-1).N == b.exact(0.3, mesh.center(-1)).N);
  CHECK(f.cell(-2).Gamma == b.exact(0.3, mesh.center(-2)).Gamma);
  CHECK(f.cell(8).N == b.exact(0.3, mesh.center(8)).N);
  CHECK(f.cell(9).Gamma == b.exact(0.3, mesh.center(9)).Gamma);

  CHECK_THROWS_AS(fill_ghosts(f, spec, mesh, nullptr, 0.3), std::invalid_argument);
}

TEST_CASE("boundary spec validation") {
  BoundarySpec one_sided;
  one_sided.left = LeftBoundary::periodic;
  one_sided.right = RightBoundary::transparent;
  CHECK_THROWS_AS(one_sided.validate(), std::invalid_argument);

  BoundarySpec sonic;
  sonic.right = RightBoundary::dirichlet_mach;
  sonic.right_mach = 1.0;
  CHECK_THROWS_AS(sonic.validate(), std::invalid_argument);

  BoundarySpec super;
  super.left = LeftBoundary::dirichlet_mach;
  super.left_mach = -1.2;
  CHECK_THROWS_AS(super.validate(), std::invalid_argument);

  BoundarySpec ok;
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("symmetry boundary matches the restriction of a mirrored full-domain run") {
  // Half domain [0, 0.5] with the symmetry condition vs full domain
  // [-0.5, 0.5] with even/odd data; dx = 1/256 keeps the cell centers of the
  // two grids exactly mirrored. Both runs close the outer ends with exact
  // ghosts so the only difference is the treatment of x = 0.
  const ManufacturedCase b = ManufacturedCase::case_b(0.9);

  RunConfig half;
  half.mesh = Mesh1D::make(0.0, 0.5, 128, 0.5);
  half.boundary.left = LeftBoundary::symmetry;
  half.boundary.right = RightBoundary::exact;
  half.mcase = b;
  half.t_end = 0.04;

  RunConfig full;
  full.mesh = Mesh1D::make(-0.5, 0.5, 256, 0.5);
  full.boundary.left = LeftBoundary::exact;
  full.boundary.right = RightBoundary::exact;
  full.mcase = b;
  full.t_end = 0.04;

  const RunResult rh = run_simulation(half);
  const RunResult rf = run_simulation(full);
  REQUIRE_FALSE(rh.blowup.blew_up);
  REQUIRE_FALSE(rf.blowup.blew_up);

  double worst = 0.0;
  for (int i = 0; i < 128; ++i) {
    worst = std::max(worst, std::abs(rh.field.cell(i).N - rf.field.cell(128 + i).N));
    worst = std::max(worst, std::abs(rh.field.cell(i).Gamma - rf.field.cell(128 + i).Gamma));
  }
  CHECK(worst <= 1e-10);
}
