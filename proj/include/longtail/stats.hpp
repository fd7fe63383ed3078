#pragma once

#include <map>
#include <string>
#include <vector>

#include "longtail/coco.hpp"
#include "longtail/curation.hpp"

namespace longtail {

// Per-class image and instance tallies (crowd annotations excluded).
struct ClassHistogram {
  std::map<Id, std::size_t> per_class_image_count;
  std::map<Id, std::size_t> per_class_instance_count;
  std::vector<Id> order;  // descending image count, ties ascending id
};

struct ZipfFit {
  double chi_square = 0.0;
  double l1 = 0.0;  // sum |empirical proportion - target probability|
};

ClassHistogram histogram(const DatasetIndex& index);

// Goodness of fit of the per-class image proportions (in rank order)
// against the spec. Chi-square pools trailing ranks whose expected count
// falls under 5. Both statistics are 0 exactly when the empirical
// proportions equal the target probabilities.
ZipfFit zipf_fit(const ClassHistogram& hist, const ZipfSpec& spec);

std::string histogram_csv(const ClassHistogram& hist, const std::map<Id, std::string>& names);

// Self-contained 800x500 bar chart, bars in rank order.
std::string svg_bar_chart(const std::string& title, const std::vector<std::string>& labels,
                          const std::vector<std::size_t>& values);

// Writes stats.csv, images_per_class.svg and instances_per_class.svg into
// `out_dir`; returns the written paths.
std::vector<std::string> emit_report(const ClassHistogram& hist, const ZipfFit& fit,
                                     const std::map<Id, std::string>& names,
                                     const std::string& out_dir);

}  // namespace longtail
