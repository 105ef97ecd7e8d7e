#include "ssodr/geometry.hpp"

#include <algorithm>

namespace ssodr {

double iou(const Box& a, const Box& b) {
  if (!a.valid() || !b.valid()) {
    throw ValidationError("iou: degenerate or non-finite box");
  }
  const double ix1 = std::max(a.x1, b.x1);
  const double iy1 = std::max(a.y1, b.y1);
  const double ix2 = std::min(a.x2, b.x2);
  const double iy2 = std::min(a.y2, b.y2);
  const double iw = std::max(0.0, ix2 - ix1);
  const double ih = std::max(0.0, iy2 - iy1);
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  return inter / uni;
}

}  // namespace ssodr
