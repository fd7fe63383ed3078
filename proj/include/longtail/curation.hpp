#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "longtail/coco.hpp"

namespace longtail {

// Rank -> probability targets of the power-law P(n) = (1/n^s) / sum_k 1/k^s.
struct ZipfSpec {
  double s = 0.0;
  int k = 0;
  std::vector<double> probabilities;  // probabilities[i] is rank i+1
};

ZipfSpec zipf_targets(double s, int k);

struct CurationReport {
  std::size_t kept_image_count = 0;
  std::size_t removed_by_detection_cap = 0;
  std::size_t removed_by_category_strip = 0;
  std::size_t removed_by_surplus_filter = 0;
  std::map<Id, std::size_t> per_class_image_counts;
  std::map<Id, std::size_t> per_class_instance_counts;
  // Targets the surplus filter aimed for; the gap to the achieved counts is
  // the residual deviation caused by class co-occurrence.
  std::map<Id, std::size_t> per_class_target_counts;
};

// Drops every image whose annotation count exceeds the cap (inclusive:
// count == max_detections is kept). Crowd annotations count as detections.
DatasetIndex filter_max_detections(const DatasetIndex& index, std::size_t max_detections);

// The k categories with the highest image counts, sorted by descending
// count, ties broken by ascending category id.
std::vector<Id> select_top_k_categories(const DatasetIndex& index, std::size_t k);

// Removes all annotations of categories outside `keep`, then any image left
// with zero annotations. Categories not in `keep` are dropped from the
// category table.
DatasetIndex strip_categories(const DatasetIndex& index, const std::set<Id>& keep);

// Shapes per-class image counts toward T_n = round(P(n) * B), where B is
// chosen so the rank-K (rarest) class keeps every image it has. Greedy
// removal: repeatedly drop the image with the largest score
//   sum over its classes c of max(0, count_c - T_c) / T_c
// (summed in ascending category-id order), ties broken by largest image id.
// Images containing the rank-K class are never candidates. Stops when no
// class exceeds its target or no candidate has positive score. Fully
// deterministic; the seed parameter is accepted for interface stability and
// currently unused.
std::pair<DatasetIndex, CurationReport> enforce_longtail(const DatasetIndex& index,
                                                         const ZipfSpec& spec,
                                                         const std::vector<Id>& rank_order,
                                                         std::uint64_t seed);

}  // namespace longtail
