#include "mira/silhouette.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mira {

double pairwise_distance(const FeatureVector& x, const FeatureVector& y) {
  double acc = 0.0;
  for (int f = 0; f < kNumFeatures; ++f) {
    double d = x[f] - y[f];
    acc += d * d;
  }
  return std::sqrt(acc);
}

namespace {

using Point = std::array<double, kNumFeatures>;

// Materializes the feature matrix, z-scored per feature when requested.
// A zero-variance feature contributes nothing to any distance either way.
std::vector<Point> feature_matrix(const Dataset& ds, bool normalize) {
  std::vector<Point> pts(static_cast<std::size_t>(ds.size()));
  for (int i = 0; i < ds.size(); ++i)
    for (int f = 0; f < kNumFeatures; ++f)
      pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)] = ds[i].features[f];
  if (!normalize || ds.empty()) return pts;

  for (int f = 0; f < kNumFeatures; ++f) {
    double mean = 0.0;
    for (const Point& p : pts) mean += p[static_cast<std::size_t>(f)];
    mean /= static_cast<double>(pts.size());
    double var = 0.0;
    for (const Point& p : pts) {
      double d = p[static_cast<std::size_t>(f)] - mean;
      var += d * d;
    }
    var /= static_cast<double>(pts.size());
    double sd = std::sqrt(var);
    double scale = sd > 0.0 ? 1.0 / sd : 1.0;
    for (Point& p : pts)
      p[static_cast<std::size_t>(f)] = (p[static_cast<std::size_t>(f)] - mean) * scale;
  }
  return pts;
}

double point_distance(const Point& x, const Point& y) {
  double acc = 0.0;
  for (std::size_t f = 0; f < kNumFeatures; ++f) {
    double d = x[f] - y[f];
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace

double class_silhouette(const Dataset& ds, ClassId j, const SilhouetteOptions& opts) {
  const int n_j = ds.count_of(j);
  const int n_other = ds.size() - n_j;
  if (n_j < 2)
    throw std::invalid_argument("degenerate class for silhouette: fewer than 2 samples of " +
                                ds.class_name(j));
  if (n_other < 1)
    throw std::invalid_argument("degenerate class for silhouette: no samples outside " +
                                ds.class_name(j));

  const std::vector<Point> pts = feature_matrix(ds, opts.normalize_features);
  const std::vector<int>& members = ds.members_of(j);

  double total = 0.0;
  std::vector<double> per_class_sum(static_cast<std::size_t>(ds.num_classes()));
  for (int i : members) {
    const Point& xi = pts[static_cast<std::size_t>(i)];
    std::fill(per_class_sum.begin(), per_class_sum.end(), 0.0);
    for (int k = 0; k < ds.size(); ++k) {
      if (k == i) continue;
      per_class_sum[static_cast<std::size_t>(ds[k].label)] +=
          point_distance(xi, pts[static_cast<std::size_t>(k)]);
    }

    double a = per_class_sum[static_cast<std::size_t>(j)] / static_cast<double>(n_j - 1);
    double b;
    if (opts.nearest_cluster_b) {
      b = std::numeric_limits<double>::infinity();
      for (ClassId c = 0; c < ds.num_classes(); ++c) {
        if (c == j || ds.count_of(c) == 0) continue;
        b = std::min(b, per_class_sum[static_cast<std::size_t>(c)] /
                            static_cast<double>(ds.count_of(c)));
      }
    } else {
      double sum = 0.0;
      for (ClassId c = 0; c < ds.num_classes(); ++c)
        if (c != j) sum += per_class_sum[static_cast<std::size_t>(c)];
      b = sum / static_cast<double>(n_other);
    }

    double denom = std::max(a, b);
    total += denom > 0.0 ? (b - a) / denom : 0.0;
  }

  double sc = total / static_cast<double>(n_j);
  return std::clamp(sc, -1.0, 1.0);
}

double weighted_silhouette(double sc_j, int n_j, int n_left, const InductionConfig& cfg) {
  if (n_j < 1 || n_j > n_left)
    throw std::invalid_argument("weighted silhouette needs 1 <= n_j <= n_left");
  return cfg.lambda1 *
             std::sqrt(cfg.lambda2 * static_cast<double>(n_j) / static_cast<double>(n_left)) +
         cfg.lambda3 * sc_j;
}

std::vector<ClassScore> score_classes(const Dataset& remaining, const InductionConfig& cfg) {
  SilhouetteOptions opts{cfg.nearest_cluster_b, cfg.normalize_features};
  std::vector<ClassScore> scores;
  const int n_left = remaining.size();
  for (ClassId c = 0; c < remaining.num_classes(); ++c) {
    int n_c = remaining.count_of(c);
    if (n_c < 2 || n_c == n_left) continue;
    ClassScore s;
    s.cls = c;
    s.n_class = n_c;
    s.n_left = n_left;
    s.sc = class_silhouette(remaining, c, opts);
    s.weighted = weighted_silhouette(s.sc, n_c, n_left, cfg);
    scores.push_back(s);
  }
  return scores;
}

const ClassScore& pick_best_class(const std::vector<ClassScore>& scores) {
  if (scores.empty()) throw std::invalid_argument("no class scores to pick from");
  const ClassScore* best = &scores.front();
  for (const ClassScore& s : scores) {
    if (s.weighted > best->weighted ||
        (s.weighted == best->weighted && s.n_class > best->n_class))
      best = &s;
  }
  return *best;
}

ClassScore select_target_class(const Dataset& remaining, const InductionConfig& cfg) {
  if (remaining.distinct_classes_present() < 2)
    throw std::runtime_error("single-class remainder");
  std::vector<ClassScore> scores = score_classes(remaining, cfg);
  if (scores.empty())
    throw std::runtime_error("no scorable class: every remaining class has fewer than 2 samples");
  return pick_best_class(scores);
}

}  // namespace mira
