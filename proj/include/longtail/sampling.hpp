#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "longtail/coco.hpp"

namespace longtail {

enum class Aggregation { kMax, kMean };

// Per-category and per-image repeat factors:
//   f_c = |images containing c| / |all images|
//   r_c = max(1, sqrt(t / f_c))
//   r_i = max (or mean) of r_c over the classes present in image i.
// Images with no countable class get r_i = 1.
struct RepeatFactorTable {
  double t = 1.0;
  Aggregation aggregation = Aggregation::kMax;
  std::map<Id, double> category_frequency;
  std::map<Id, double> category_repeat;
  std::map<Id, double> image_repeat;
};

enum class Strategy { kUniform, kClassAware, kRepeatFactor };

std::string to_string(Strategy s);
std::string to_string(Aggregation a);

// One epoch worth of image draws. Regenerating with the same
// (index, strategy, seed, epoch) yields the identical list.
struct SamplingSchedule {
  std::uint32_t epoch = 0;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::kUniform;
  std::vector<Id> image_ids;
};

// Seeded permutation of all image ids.
SamplingSchedule uniform_schedule(const DatasetIndex& index, std::uint64_t seed,
                                  std::uint32_t epoch);

// Two-stage draw with replacement: uniform category, then uniform image
// from that category's list. `length` = 0 means one draw per dataset image.
SamplingSchedule class_aware_schedule(const DatasetIndex& index, std::size_t length,
                                      std::uint64_t seed, std::uint32_t epoch);

RepeatFactorTable repeat_factors(const DatasetIndex& index, double t, Aggregation aggregation);

// Each image appears floor(r_i) times plus one more with probability
// frac(r_i); the rounding coin is drawn from a per-(epoch, image) substream,
// then the whole multiset is permuted.
SamplingSchedule repeat_factor_schedule(const DatasetIndex& index, const RepeatFactorTable& table,
                                        std::uint64_t seed, std::uint32_t epoch);

}  // namespace longtail
