#pragma once

#include <cstdint>

#include "longtail/coco.hpp"
#include "longtail/image.hpp"

namespace longtail {

// Synthetic COCO-style dataset with a skewed class distribution and
// co-occurring classes, sized for desk-scale pipeline runs.
struct FixtureConfig {
  int image_count = 200;
  int class_count = 10;
  int width = 256;
  int height = 192;
  int min_objects = 1;
  int max_objects = 12;
  double skew = 1.0;  // class-popularity exponent; 0 = uniform
  double crowd_fraction = 0.02;
  std::uint64_t seed = 0;
};

// Builds the annotation index only; pixels are rendered on demand.
DatasetIndex make_fixture_index(const FixtureConfig& config);

// Deterministic rendering from the annotations alone: class-colored
// rectangles and ellipses on a per-image background.
Image render_fixture_image(const DatasetIndex& index, Id image_id);

}  // namespace longtail
