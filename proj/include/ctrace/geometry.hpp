#pragma once

#include <cmath>

namespace ctrace {

/// Axis-aligned rectangle, corners (x0,y0) inclusive-low, (x1,y1) high.
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }

  /// Positive-area overlap (touching edges do not count).
  bool overlaps(const Rect& o) const {
    return x0 < o.x1 && o.x0 < x1 && y0 < o.y1 && o.y0 < y1;
  }
};

/// Membership under the half-open convention [x0,x1) x [y0,y1); regions on
/// the right/top edge of the enclosing area close those edges so the area is
/// covered exactly once.
struct Region {
  Rect rect;
  bool closed_right = false;
  bool closed_top = false;

  bool contains(double x, double y) const {
    const bool in_x =
        x >= rect.x0 && (x < rect.x1 || (closed_right && x <= rect.x1));
    const bool in_y =
        y >= rect.y0 && (y < rect.y1 || (closed_top && y <= rect.y1));
    return in_x && in_y;
  }
};

inline double squared_distance(double ax, double ay, double bx, double by) {
  const double dx = ax - bx;
  const double dy = ay - by;
  return dx * dx + dy * dy;
}

}  // namespace ctrace
