#include "ctrace/spatial_grid.hpp"

#include <algorithm>
#include <cmath>

namespace ctrace {

namespace {
constexpr int kMaxCellsPerAxis = 256;
}

SpatialGrid::SpatialGrid(double area_width, double area_height,
                         double cell_size) {
  cell_size_ = std::max(cell_size, 1e-9);
  cell_size_ = std::max({cell_size_, area_width / kMaxCellsPerAxis,
                         area_height / kMaxCellsPerAxis});
  cols_ = std::max(1, static_cast<int>(std::ceil(area_width / cell_size_)));
  rows_ = std::max(1, static_cast<int>(std::ceil(area_height / cell_size_)));
  starts_.assign(static_cast<std::size_t>(cols_) * rows_ + 1, 0);
}

int SpatialGrid::cell_col(double x) const {
  const int c = static_cast<int>(std::floor(x / cell_size_));
  return std::clamp(c, 0, cols_ - 1);
}

int SpatialGrid::cell_row(double y) const {
  const int r = static_cast<int>(std::floor(y / cell_size_));
  return std::clamp(r, 0, rows_ - 1);
}

void SpatialGrid::build(const std::vector<double>& xs,
                        const std::vector<double>& ys,
                        const std::vector<std::uint32_t>& ids) {
  entries_ = xs.size();
  std::fill(starts_.begin(), starts_.end(), 0u);
  xs_.resize(entries_);
  ys_.resize(entries_);
  ids_.resize(entries_);

  std::vector<std::uint32_t> cell_of(entries_);
  for (std::size_t i = 0; i < entries_; ++i) {
    cell_of[i] = static_cast<std::uint32_t>(cell_row(ys[i])) * cols_ +
                 cell_col(xs[i]);
    ++starts_[cell_of[i] + 1];
  }
  for (std::size_t c = 1; c < starts_.size(); ++c) starts_[c] += starts_[c - 1];

  std::vector<std::uint32_t> cursor(starts_.begin(), starts_.end() - 1);
  for (std::size_t i = 0; i < entries_; ++i) {
    const std::uint32_t slot = cursor[cell_of[i]]++;
    xs_[slot] = xs[i];
    ys_[slot] = ys[i];
    ids_[slot] = ids[i];
  }
}

}  // namespace ctrace
