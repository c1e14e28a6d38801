#include "solpen/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace solpen {

Mesh1D Mesh1D::make(double x_min, double x_max, int n_cells, double limiter_start) {
  if (!(x_max > x_min)) throw std::invalid_argument("Mesh1D: x_max must exceed x_min");
  if (n_cells < 4) throw std::invalid_argument("Mesh1D: need at least 4 cells");
  if (!(limiter_start > x_min) || !(limiter_start <= x_max))
    throw std::invalid_argument("Mesh1D: limiter_start must lie in (x_min, x_max]");

  Mesh1D m;
  m.x_min = x_min;
  m.x_max = x_max;
  m.n_cells = n_cells;
  m.limiter_start = limiter_start;
  m.dx = (x_max - x_min) / n_cells;

  const double faces = (limiter_start - x_min) / m.dx;
  const double snapped = std::round(faces);
  if (std::abs(faces - snapped) > 1e-6)
    throw std::invalid_argument("Mesh1D: limiter interface at x=" + std::to_string(limiter_start) +
                                " does not coincide with a cell face for " +
                                std::to_string(n_cells) + " cells");
  m.limiter_index = static_cast<int>(snapped);
  return m;
}

}  // namespace solpen
