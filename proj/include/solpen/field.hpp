#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "solpen/model.hpp"

namespace solpen {

/// Cell array with two ghost layers per side. Interior cells are indexed
/// 0..n_cells-1; ghosts -2, -1 on the left and n_cells, n_cells+1 on the
/// right. Ghosts must be refreshed (boundary module) before reconstruction.
class FieldArray {
 public:
  static constexpr int n_ghost = 2;

  FieldArray() = default;
  explicit FieldArray(int n_cells)
      : n_cells_(n_cells), data_(static_cast<std::size_t>(n_cells) + 2 * n_ghost) {}

  int n_cells() const { return n_cells_; }

  ConservativeState& cell(int i) { return data_[static_cast<std::size_t>(i + n_ghost)]; }
  const ConservativeState& cell(int i) const { return data_[static_cast<std::size_t>(i + n_ghost)]; }

  std::span<ConservativeState> interior() {
    return {data_.data() + n_ghost, static_cast<std::size_t>(n_cells_)};
  }
  std::span<const ConservativeState> interior() const {
    return {data_.data() + n_ghost, static_cast<std::size_t>(n_cells_)};
  }

  bool interior_finite() const {
    for (const auto& u : interior())
      if (!std::isfinite(u.N) || !std::isfinite(u.Gamma)) return false;
    return true;
  }

 private:
  int n_cells_ = 0;
  std::vector<ConservativeState> data_;
};

}  // namespace solpen
