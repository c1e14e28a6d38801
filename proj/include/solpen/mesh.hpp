#pragma once

namespace solpen {

/// Uniform cell-centered grid on [x_min, x_max]. The obstacle occupies
/// [limiter_start, x_max]; the plasma-limiter interface must coincide with a
/// cell face. limiter_start == x_max means no obstacle cells (reference runs).
struct Mesh1D {
  double x_min = 0.0;
  double x_max = 0.5;
  int n_cells = 0;
  double limiter_start = 0.5;
  double dx = 0.0;
  int limiter_index = 0;  // first cell whose center lies in the limiter

  /// Validates and builds a mesh; throws std::invalid_argument if the
  /// limiter interface does not sit on a cell face.
  static Mesh1D make(double x_min, double x_max, int n_cells, double limiter_start);

  double center(int i) const { return x_min + (i + 0.5) * dx; }
  double face(int f) const { return x_min + f * dx; }
  int plasma_cells() const { return limiter_index; }
};

}  // namespace solpen
