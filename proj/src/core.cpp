#include "mira/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace mira {

const std::array<std::string, kNumFeatures>& feature_names() {
  static const std::array<std::string, kNumFeatures> names = {
      "range", "doppler", "azimuth", "elevation", "peak"};
  return names;
}

int feature_index(std::string_view name) {
  const auto& names = feature_names();
  for (int i = 0; i < kNumFeatures; ++i)
    if (names[static_cast<std::size_t>(i)] == name) return i;
  throw std::invalid_argument("unknown feature name: " + std::string(name));
}

double FeatureVector::operator[](int i) const {
  switch (i) {
    case 0: return range;
    case 1: return doppler;
    case 2: return azimuth;
    case 3: return elevation;
    case 4: return peak;
    default: throw std::out_of_range("feature index out of range");
  }
}

double& FeatureVector::operator[](int i) {
  switch (i) {
    case 0: return range;
    case 1: return doppler;
    case 2: return azimuth;
    case 3: return elevation;
    case 4: return peak;
    default: throw std::out_of_range("feature index out of range");
  }
}

bool FeatureVector::is_finite() const {
  return std::isfinite(range) && std::isfinite(doppler) && std::isfinite(azimuth) &&
         std::isfinite(elevation) && std::isfinite(peak);
}

void GestureRecording::validate() const {
  const int n = static_cast<int>(frames.size());
  if (!(0 <= window_start && window_start < window_end && window_end <= n))
    throw std::invalid_argument("gesture window [" + std::to_string(window_start) + ", " +
                                std::to_string(window_end) + ") invalid for " +
                                std::to_string(n) + " frames");
  for (const FeatureVector& f : frames)
    if (!f.is_finite()) throw std::invalid_argument("non-finite frame feature");
}

Dataset::Dataset(std::vector<std::string> alphabet, std::vector<LabeledSample> samples)
    : alphabet_(std::move(alphabet)), samples_(std::move(samples)) {
  if (alphabet_.empty()) throw std::invalid_argument("dataset alphabet must be non-empty");
  {
    std::unordered_set<std::string> seen;
    for (const std::string& name : alphabet_)
      if (!seen.insert(name).second)
        throw std::invalid_argument("duplicate class in alphabet: " + name);
  }
  by_class_.resize(alphabet_.size());
  std::unordered_set<int> ids;
  ids.reserve(samples_.size());
  for (int i = 0; i < size(); ++i) {
    const LabeledSample& s = samples_[static_cast<std::size_t>(i)];
    if (s.label < 0 || s.label >= num_classes())
      throw std::invalid_argument("sample label out of alphabet at position " +
                                  std::to_string(i));
    if (!s.features.is_finite())
      throw std::invalid_argument("non-finite feature at position " + std::to_string(i));
    if (!ids.insert(s.sample_id).second)
      throw std::invalid_argument("duplicate sample_id " + std::to_string(s.sample_id));
    by_class_[static_cast<std::size_t>(s.label)].push_back(i);
  }
}

const std::string& Dataset::class_name(ClassId c) const {
  if (c < 0 || c >= num_classes()) throw std::out_of_range("class id out of range");
  return alphabet_[static_cast<std::size_t>(c)];
}

std::optional<ClassId> Dataset::class_id(std::string_view name) const {
  for (int c = 0; c < num_classes(); ++c)
    if (alphabet_[static_cast<std::size_t>(c)] == name) return c;
  return std::nullopt;
}

int Dataset::count_of(ClassId c) const {
  return static_cast<int>(members_of(c).size());
}

const std::vector<int>& Dataset::members_of(ClassId c) const {
  if (c < 0 || c >= num_classes()) throw std::out_of_range("class id out of range");
  return by_class_[static_cast<std::size_t>(c)];
}

int Dataset::distinct_classes_present() const {
  int n = 0;
  for (const auto& members : by_class_)
    if (!members.empty()) ++n;
  return n;
}

std::optional<ClassId> Dataset::majority_class() const {
  if (empty()) return std::nullopt;
  ClassId best = 0;
  int best_count = -1;
  for (ClassId c = 0; c < num_classes(); ++c) {
    int n = count_of(c);
    if (n > best_count) {
      best = c;
      best_count = n;
    }
  }
  return best;
}

Dataset Dataset::subset(const std::vector<int>& positions) const {
  std::vector<LabeledSample> out;
  out.reserve(positions.size());
  for (int p : positions) {
    if (p < 0 || p >= size()) throw std::out_of_range("subset position out of range");
    out.push_back(samples_[static_cast<std::size_t>(p)]);
  }
  return Dataset(alphabet_, std::move(out));
}

const char* op_token(LiteralOp op) {
  return op == LiteralOp::LessEq ? "<=" : ">";
}

std::optional<LiteralOp> op_from_token(std::string_view tok) {
  if (tok == "<=") return LiteralOp::LessEq;
  if (tok == ">") return LiteralOp::Greater;
  return std::nullopt;
}

const char* kind_token(RuleKind k) {
  switch (k) {
    case RuleKind::Specific: return "specific";
    case RuleKind::Default: return "default";
    case RuleKind::Personalized: return "personalized";
  }
  return "specific";
}

std::optional<RuleKind> kind_from_token(std::string_view tok) {
  if (tok == "specific") return RuleKind::Specific;
  if (tok == "default") return RuleKind::Default;
  if (tok == "personalized") return RuleKind::Personalized;
  return std::nullopt;
}

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw std::invalid_argument(field + " " + what);
}

}  // namespace

const InductionConfig& validate_config(const InductionConfig& cfg) {
  require(cfg.max_rules >= 1, "max_rules", "must be >= 1, got " + std::to_string(cfg.max_rules));
  require(cfg.max_literals >= 1, "max_literals",
          "must be >= 1, got " + std::to_string(cfg.max_literals));
  require(cfg.min_train_coverage >= 1, "min_train_coverage",
          "must be >= 1, got " + std::to_string(cfg.min_train_coverage));
  require(cfg.min_val_coverage >= 1, "min_val_coverage",
          "must be >= 1, got " + std::to_string(cfg.min_val_coverage));
  require(cfg.min_val_accuracy >= 0.0 && cfg.min_val_accuracy <= 1.0, "min_val_accuracy",
          "out of [0,1], got " + std::to_string(cfg.min_val_accuracy));
  require(cfg.min_train_remaining >= 1, "min_train_remaining",
          "must be >= 1, got " + std::to_string(cfg.min_train_remaining));
  require(cfg.min_val_remaining >= 1, "min_val_remaining",
          "must be >= 1, got " + std::to_string(cfg.min_val_remaining));
  require(cfg.beta >= 0.0, "beta", "must be >= 0, got " + std::to_string(cfg.beta));
  require(cfg.lambda1 >= 0.0 && cfg.lambda1 <= 1.0, "lambda1",
          "out of [0,1], got " + std::to_string(cfg.lambda1));
  require(cfg.lambda2 >= 0.0, "lambda2", "must be >= 0, got " + std::to_string(cfg.lambda2));
  require(cfg.lambda3 >= 0.0 && cfg.lambda3 <= 1.0, "lambda3",
          "out of [0,1], got " + std::to_string(cfg.lambda3));
  require(cfg.max_personal_rules >= 1, "max_personal_rules",
          "must be >= 1, got " + std::to_string(cfg.max_personal_rules));
  require(cfg.personal_min_train_coverage >= 0, "personal_min_train_coverage",
          "must be >= 0, got " + std::to_string(cfg.personal_min_train_coverage));
  require(cfg.personal_min_train_remaining >= 1, "personal_min_train_remaining",
          "must be >= 1, got " + std::to_string(cfg.personal_min_train_remaining));
  return cfg;
}

void RuleSet::validate() const {
  if (alphabet.empty()) throw std::invalid_argument("rule set alphabet must be non-empty");
  if (rules.empty()) throw std::invalid_argument("rule set must contain a default rule");
  validate_config(config);
  int specific = 0;
  int personalized = 0;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Rule& r = rules[i];
    bool last = (i + 1 == rules.size());
    if (r.kind == RuleKind::Default) {
      if (!last) throw std::invalid_argument("default rule must be last");
      if (!r.literals.empty())
        throw std::invalid_argument("default rule must have no literals");
    } else {
      if (last) throw std::invalid_argument("last rule must be the default rule");
      if (r.literals.empty())
        throw std::invalid_argument("non-default rule must have at least one literal");
      if (r.kind == RuleKind::Specific)
        ++specific;
      else
        ++personalized;
    }
    if (static_cast<int>(r.literals.size()) > config.max_literals)
      throw std::invalid_argument("rule exceeds max_literals");
    if (r.predicted_class < 0 || r.predicted_class >= static_cast<int>(alphabet.size()))
      throw std::invalid_argument("rule predicts a class outside the alphabet");
    for (const Literal& lit : r.literals) {
      if (lit.feature < 0 || lit.feature >= kNumFeatures)
        throw std::invalid_argument("literal feature index out of range");
      if (!std::isfinite(lit.threshold))
        throw std::invalid_argument("literal threshold must be finite");
    }
    if (r.train_stats.correct > r.train_stats.covered || r.train_stats.covered < 0 ||
        r.train_stats.correct < 0)
      throw std::invalid_argument("rule train stats violate correct <= covered");
    if (r.val_stats &&
        (r.val_stats->correct > r.val_stats->covered || r.val_stats->covered < 0 ||
         r.val_stats->correct < 0))
      throw std::invalid_argument("rule val stats violate correct <= covered");
  }
  if (specific > config.max_rules)
    throw std::invalid_argument("specific rule count exceeds max_rules");
  if (personalized > config.max_personal_rules)
    throw std::invalid_argument("personalized rule count exceeds max_personal_rules");
}

int RuleSet::specific_count() const {
  int n = 0;
  for (const Rule& r : rules)
    if (r.kind == RuleKind::Specific) ++n;
  return n;
}

int RuleSet::personalized_count() const {
  int n = 0;
  for (const Rule& r : rules)
    if (r.kind == RuleKind::Personalized) ++n;
  return n;
}

}  // namespace mira
