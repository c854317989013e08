#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mira {

inline constexpr int kNumFeatures = 5;

/// Fixed feature order: (range, doppler, azimuth, elevation, peak).
const std::array<std::string, kNumFeatures>& feature_names();
int feature_index(std::string_view name);  // throws std::invalid_argument on unknown name

struct FeatureVector {
  double range = 0.0;
  double doppler = 0.0;
  double azimuth = 0.0;
  double elevation = 0.0;
  double peak = 0.0;

  double operator[](int i) const;
  double& operator[](int i);
  bool is_finite() const;
  bool operator==(const FeatureVector&) const = default;
};

/// Per-frame feature track of one recording plus the gesture window [start, end).
struct GestureRecording {
  std::vector<FeatureVector> frames;
  int window_start = 0;
  int window_end = 0;

  void validate() const;  // bounds and finiteness; throws std::invalid_argument
};

using ClassId = int;

struct LabeledSample {
  FeatureVector features;
  ClassId label = 0;
  std::string user_id;
  std::string location_id;
  int sample_id = 0;

  bool operator==(const LabeledSample&) const = default;
};

/// Immutable labeled collection with a fixed class alphabet and O(1) per-class counts.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<std::string> alphabet, std::vector<LabeledSample> samples);

  int size() const { return static_cast<int>(samples_.size()); }
  bool empty() const { return samples_.empty(); }
  const LabeledSample& operator[](int i) const { return samples_[static_cast<std::size_t>(i)]; }
  const std::vector<LabeledSample>& samples() const { return samples_; }

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  int num_classes() const { return static_cast<int>(alphabet_.size()); }
  const std::string& class_name(ClassId c) const;
  std::optional<ClassId> class_id(std::string_view name) const;

  int count_of(ClassId c) const;
  const std::vector<int>& members_of(ClassId c) const;  // positions, ascending
  int distinct_classes_present() const;

  /// Most frequent class; ties broken by alphabet order. nullopt on an empty set.
  std::optional<ClassId> majority_class() const;

  /// New Dataset holding the samples at `positions` (ids preserved).
  Dataset subset(const std::vector<int>& positions) const;

  bool operator==(const Dataset& other) const {
    return alphabet_ == other.alphabet_ && samples_ == other.samples_;
  }

 private:
  std::vector<std::string> alphabet_;
  std::vector<LabeledSample> samples_;
  std::vector<std::vector<int>> by_class_;
};

enum class LiteralOp { LessEq, Greater };

const char* op_token(LiteralOp op);  // "<=" / ">"
std::optional<LiteralOp> op_from_token(std::string_view tok);

/// Threshold predicate on a single feature.
struct Literal {
  int feature = 0;
  LiteralOp op = LiteralOp::LessEq;
  double threshold = 0.0;

  bool holds(const FeatureVector& x) const {
    double v = x[feature];
    return op == LiteralOp::LessEq ? v <= threshold : v > threshold;
  }
  bool operator==(const Literal&) const = default;
};

enum class RuleKind { Specific, Default, Personalized };

const char* kind_token(RuleKind k);
std::optional<RuleKind> kind_from_token(std::string_view tok);

struct RuleStats {
  long covered = 0;
  long correct = 0;
  bool operator==(const RuleStats&) const = default;
};

/// Conjunction of literals with a predicted class. The default rule has no
/// literals and covers everything.
struct Rule {
  std::vector<Literal> literals;
  ClassId predicted_class = 0;
  RuleKind kind = RuleKind::Specific;
  RuleStats train_stats;
  std::optional<RuleStats> val_stats;

  bool covers(const FeatureVector& x) const {
    for (const Literal& lit : literals)
      if (!lit.holds(x)) return false;
    return true;
  }
  bool operator==(const Rule&) const = default;
};

struct InductionConfig {
  int max_rules = 15;
  int max_literals = 2;
  int min_train_coverage = 8;
  int min_val_coverage = 5;
  double min_val_accuracy = 0.70;
  int min_train_remaining = 6;
  int min_val_remaining = 2;
  double beta = 0.3;
  double lambda1 = 0.5;
  double lambda2 = 10.0;
  double lambda3 = 0.7;
  int max_personal_rules = 4;
  std::uint64_t seed = 0;
  // Silhouette variants: pooled b(x) is the default; the classical
  // nearest-cluster minimum and per-feature z-scoring sit behind flags.
  bool nearest_cluster_b = false;
  bool normalize_features = false;
  // Personalization thresholds; coverage 0 means "derive from residual size".
  int personal_min_train_coverage = 0;
  int personal_min_train_remaining = 2;

  bool operator==(const InductionConfig&) const = default;
};

/// Returns cfg unchanged iff every bound holds; throws std::invalid_argument
/// naming the first violated field.
const InductionConfig& validate_config(const InductionConfig& cfg);

/// Ordered decision list: specific/personalized rules followed by exactly one
/// trailing default rule.
struct RuleSet {
  std::vector<Rule> rules;
  InductionConfig config;
  std::vector<std::string> alphabet;

  void validate() const;  // throws std::invalid_argument on a broken invariant
  const Rule& default_rule() const { return rules.back(); }
  int specific_count() const;
  int personalized_count() const;
  bool operator==(const RuleSet&) const = default;
};

}  // namespace mira
