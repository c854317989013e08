#pragma once

#include "mira/core.hpp"

namespace mira {

struct ClassScore {
  ClassId cls = 0;
  double sc = 0.0;        // silhouette in [-1, 1]
  double weighted = 0.0;  // lambda1 * sqrt(lambda2 * n_class / n_left) + lambda3 * sc
  int n_class = 0;
  int n_left = 0;
};

struct SilhouetteOptions {
  bool nearest_cluster_b = false;  // classical min over other clusters instead of pooled
  bool normalize_features = false;
};

/// Euclidean distance over the five features.
double pairwise_distance(const FeatureVector& x, const FeatureVector& y);

/// Mean silhouette of class j: (b - a) / max(a, b) per member, where a is the
/// mean intra-class distance (self excluded) and b the mean distance to the
/// other classes (pooled by default). Requires >= 2 members of j and >= 1
/// sample outside j.
double class_silhouette(const Dataset& ds, ClassId j, const SilhouetteOptions& opts = {});

double weighted_silhouette(double sc_j, int n_j, int n_left, const InductionConfig& cfg);

/// Scores every class with >= 2 samples present in `remaining`.
std::vector<ClassScore> score_classes(const Dataset& remaining, const InductionConfig& cfg);

/// Picks the maximal weighted score; ties broken by larger n_class then
/// alphabet order. Throws when fewer than 2 distinct classes remain or no
/// class is scorable.
ClassScore select_target_class(const Dataset& remaining, const InductionConfig& cfg);

/// Deterministic argmax over precomputed scores (shared with the covering loop).
const ClassScore& pick_best_class(const std::vector<ClassScore>& scores);

}  // namespace mira
