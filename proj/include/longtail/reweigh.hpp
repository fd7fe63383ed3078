#pragma once

#include <map>
#include <vector>

#include "longtail/coco.hpp"

namespace longtail {

// Inverse-frequency class weights: w_c = total instances / instances of c.
struct ClassWeights {
  std::map<Id, double> weights;
  std::map<Id, std::size_t> source_counts;
};

struct LossPair {
  double y = 0.0;  // true label, 0 or 1
  double p = 0.5;  // predicted probability
  Id category = 0;
};

struct LossBatch {
  std::vector<LossPair> pairs;
};

// Instance counts exclude crowd annotations. Every category in the index
// must have at least one instance.
ClassWeights class_weights(const DatasetIndex& index);

// Mean binary cross-entropy. Probabilities are clamped to
// [1e-7, 1 - 1e-7] before the logs.
double bce(const LossBatch& batch);

// Weighted form. The class weight applies to the positive term only; set
// weight_negative_term to weight both terms symmetrically.
double weighted_bce(const LossBatch& batch, const ClassWeights& weights,
                    bool weight_negative_term = false);

}  // namespace longtail
