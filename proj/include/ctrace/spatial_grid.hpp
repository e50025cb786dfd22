#pragma once

#include <cstdint>
#include <vector>

namespace ctrace {

// Uniform bucket grid over the area rectangle, rebuilt once per tick with a
// counting sort. Radius queries visit the covered cell block and filter by
// exact squared distance.
class SpatialGrid {
 public:
  SpatialGrid() = default;
  SpatialGrid(double area_width, double area_height, double cell_size);

  /// Rebuilds the index from parallel position arrays; `ids[i]` is the value
  /// reported by queries for point i.
  void build(const std::vector<double>& xs, const std::vector<double>& ys,
             const std::vector<std::uint32_t>& ids);

  /// Calls fn(id, x, y) for every indexed point with distance <= radius of
  /// (cx, cy), using squared-distance comparison.
  template <typename Fn>
  void for_each_within(double cx, double cy, double radius, Fn&& fn) const {
    if (radius < 0 || entries_ == 0) return;
    const double r2 = radius * radius;
    int c0 = cell_col(cx - radius);
    int c1 = cell_col(cx + radius);
    int r0 = cell_row(cy - radius);
    int r1 = cell_row(cy + radius);
    for (int row = r0; row <= r1; ++row) {
      for (int col = c0; col <= c1; ++col) {
        const std::size_t cell = static_cast<std::size_t>(row) * cols_ + col;
        for (std::uint32_t k = starts_[cell]; k < starts_[cell + 1]; ++k) {
          const double dx = xs_[k] - cx;
          const double dy = ys_[k] - cy;
          if (dx * dx + dy * dy <= r2) fn(ids_[k], xs_[k], ys_[k]);
        }
      }
    }
  }

  std::size_t size() const { return entries_; }

 private:
  int cell_col(double x) const;
  int cell_row(double y) const;

  double cell_size_ = 1.0;
  int cols_ = 0;
  int rows_ = 0;
  std::size_t entries_ = 0;
  std::vector<std::uint32_t> starts_;  // cols*rows + 1 prefix offsets
  std::vector<double> xs_, ys_;        // bucket-ordered copies
  std::vector<std::uint32_t> ids_;
};

}  // namespace ctrace
