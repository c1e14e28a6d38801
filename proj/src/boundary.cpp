#include "solpen/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace solpen {

void BoundarySpec::validate() const {
  const bool lp = left == LeftBoundary::periodic;
  const bool rp = right == RightBoundary::periodic;
  if (lp != rp) throw std::invalid_argument("BoundarySpec: periodic requires both sides periodic");
  if (left == LeftBoundary::dirichlet_mach && !(std::abs(left_mach) < 1.0))
    throw std::invalid_argument("BoundarySpec: left Dirichlet Mach value must satisfy |M| < 1");
  if (right == RightBoundary::dirichlet_mach && !(std::abs(right_mach) < 1.0))
    throw std::invalid_argument("BoundarySpec: right Dirichlet Mach value must satisfy |M| < 1");
}

void fill_ghosts(FieldArray& field, const BoundarySpec& spec, const Mesh1D& mesh,
                 const ManufacturedCase* mcase, double t) {
  const int n = field.n_cells();
  if ((spec.left == LeftBoundary::exact || spec.right == RightBoundary::exact) && mcase == nullptr)
    throw std::invalid_argument("fill_ghosts: exact boundary requires a manufactured case");

  switch (spec.left) {
    case LeftBoundary::symmetry:
      // N even, Gamma odd about x_min.
      field.cell(-1) = {field.cell(0).N, -field.cell(0).Gamma};
      field.cell(-2) = {field.cell(1).N, -field.cell(1).Gamma};
      break;
    case LeftBoundary::dirichlet_mach: {
      const double n_ghost = field.cell(0).N;
      field.cell(-1) = {n_ghost, spec.left_mach * n_ghost};
      field.cell(-2) = field.cell(-1);
      break;
    }
    case LeftBoundary::periodic:
      field.cell(-1) = field.cell(n - 1);
      field.cell(-2) = field.cell(n - 2);
      break;
    case LeftBoundary::exact:
      field.cell(-1) = mcase->exact(t, mesh.center(-1));
      field.cell(-2) = mcase->exact(t, mesh.center(-2));
      break;
  }

  switch (spec.right) {
    case RightBoundary::dirichlet_mach: {
      const double n_ghost = field.cell(n - 1).N;
      field.cell(n) = {n_ghost, spec.right_mach * n_ghost};
      field.cell(n + 1) = field.cell(n);
      break;
    }
    case RightBoundary::transparent:
      field.cell(n) = field.cell(n - 1);
      field.cell(n + 1) = field.cell(n - 1);
      break;
    case RightBoundary::periodic:
      field.cell(n) = field.cell(0);
      field.cell(n + 1) = field.cell(1);
      break;
    case RightBoundary::exact:
      field.cell(n) = mcase->exact(t, mesh.center(n));
      field.cell(n + 1) = mcase->exact(t, mesh.center(n + 1));
      break;
  }
}

}  // namespace solpen
