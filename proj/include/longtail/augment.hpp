#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "longtail/bbox.hpp"
#include "longtail/coco.hpp"
#include "longtail/image.hpp"
#include "longtail/rng.hpp"

namespace longtail {

struct LabeledBox {
  Id category_id = 0;
  BBox box;

  bool operator==(const LabeledBox&) const = default;
};

// One quadrant of a mosaic. The source is first resized to
// (scaled_w, scaled_h), then `crop` (in resized coordinates) is copied to
// `dest` on the canvas; crop and dest always have equal size.
struct Placement {
  Id image_id = 0;
  int src_w = 0;
  int src_h = 0;
  int scaled_w = 0;
  int scaled_h = 0;
  RectI crop;
  RectI dest;
};

// Four placements tiling a (2S x 2S) canvas, meeting at (cx, cy). Order is
// top-left, top-right, bottom-left, bottom-right.
struct MosaicLayout {
  int canvas_size = 0;  // 2S
  int cx = 0;
  int cy = 0;
  std::array<Placement, 4> placements;
};

struct Provenance {
  std::vector<Id> source_image_ids;
  std::vector<std::string> transforms;
};

struct AugmentedSample {
  Image pixels;
  std::vector<LabeledBox> labels;  // canvas coordinates
  Provenance provenance;
};

struct MixupSpec {
  double alpha = 32.0;       // Beta(alpha, alpha) shape
  double probability = 0.3;  // chance of applying mixup at all
};

// Source pixels plus labels in original image coordinates.
struct MosaicSource {
  const Image* pixels = nullptr;
  std::vector<LabeledBox> labels;
};

// Deterministic core: layout for a given center point. cx, cy must lie in
// [ceil(S/2), floor(3S/2)] so every quadrant is nonempty.
MosaicLayout plan_mosaic_at(const std::array<const ImageRecord*, 4>& sources, int base_size,
                            int cx, int cy);

// Draws the center uniformly from [ceil(S/2), floor(3S/2)]^2.
MosaicLayout plan_mosaic(const std::array<const ImageRecord*, 4>& sources, int base_size,
                         Rng& rng);

AugmentedSample apply_mosaic(const std::array<MosaicSource, 4>& sources,
                             const MosaicLayout& layout);

inline constexpr double kMinClippedSide = 2.0;    // pixels
inline constexpr double kMinClippedAreaFrac = 0.25;

// Intersects each box with `crop`, translates by (dest - crop) so the crop
// origin lands on dest_offset, and drops boxes whose clipped side falls
// under kMinClippedSide or whose clipped area falls under
// kMinClippedAreaFrac of the original area.
std::vector<LabeledBox> adjust_labels(const std::vector<LabeledBox>& labels, const BBox& crop,
                                      double dest_x, double dest_y);

double sample_lambda(const MixupSpec& spec, Rng& rng);

// pixels = round(lambda * a + (1 - lambda) * b); labels concatenated a ++ b.
AugmentedSample mixup(const AugmentedSample& a, const AugmentedSample& b, double lambda);

enum class SourceMode { kUniform, kUnderrepBiased };
enum class PairMode { kUniform, kRareSecond };

struct BiasSpec {
  std::vector<Id> rare_categories;
  double probability = 1.0;  // per-slot chance of drawing from the rare set
};

// Four image draws. Uniform mode draws iid over all images; biased mode
// routes each slot, with bias probability, through the two-stage rule
// (uniform rare category, then uniform image containing it).
std::array<Id, 4> pick_mosaic_sources(const DatasetIndex& index, SourceMode mode,
                                      const BiasSpec& bias, Rng& rng);

// Source quadruples for a mixup pair: the first is always uniform, the
// second is biased when mode is kRareSecond.
std::pair<std::array<Id, 4>, std::array<Id, 4>> pick_mixup_pair(const DatasetIndex& index,
                                                                PairMode mode,
                                                                const BiasSpec& bias, Rng& rng);

}  // namespace longtail
