#pragma once

#include <algorithm>

namespace longtail {

// Axis-aligned box in the COCO xywh convention: (x, y) is the top-left
// corner, w/h extend right and down. Coordinates are absolute pixels.
struct BBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double x2() const { return x + w; }
  double y2() const { return y + h; }
  double area() const { return w * h; }

  bool operator==(const BBox&) const = default;
};

inline bool is_empty(const BBox& b) { return !(b.w > 0.0 && b.h > 0.0); }

// Intersection; an empty result has w <= 0 or h <= 0.
inline BBox intersect(const BBox& a, const BBox& b) {
  const double x1 = std::max(a.x, b.x);
  const double y1 = std::max(a.y, b.y);
  const double x2 = std::min(a.x2(), b.x2());
  const double y2 = std::min(a.y2(), b.y2());
  return {x1, y1, x2 - x1, y2 - y1};
}

// Clamp to the [0,W]x[0,H] image rectangle; may come out empty.
inline BBox clamp_to(const BBox& b, double width, double height) {
  return intersect(b, BBox{0.0, 0.0, width, height});
}

// Integer rectangle for pixel-space layout work.
struct RectI {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool operator==(const RectI&) const = default;
};

}  // namespace longtail
