#pragma once

#include <cmath>

#include "ssodr/types.hpp"

namespace ssodr {

// Axis-aligned box, half-open real pixel coordinates; area = (x2-x1)*(y2-y1).
struct Box {
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double area() const { return width() * height(); }
  bool valid() const {
    return std::isfinite(x1) && std::isfinite(y1) && std::isfinite(x2) &&
           std::isfinite(y2) && x1 < x2 && y1 < y2;
  }
  Box translated(double dx, double dy) const {
    return {x1 + dx, y1 + dy, x2 + dx, y2 + dy};
  }
  bool operator==(const Box& o) const = default;
};

/// Intersection-over-union in [0,1]. Throws ValidationError on degenerate boxes.
double iou(const Box& a, const Box& b);

}  // namespace ssodr
