#pragma once

#include <utility>

#include "mira/core.hpp"
#include "mira/silhouette.hpp"

namespace mira {

struct IterationRecord {
  int iteration = 0;
  std::vector<ClassScore> class_scores;
  std::optional<ClassId> selected_class;
  std::optional<Rule> rule;  // grown rule, whether or not accepted
  bool accepted = false;
  std::string rejection_reason;
  std::vector<int> covered_train_ids;  // sample ids removed on acceptance
  std::vector<int> covered_val_ids;
  int train_remaining = 0;  // sizes after this iteration
  int val_remaining = 0;
};

struct InductionTrace {
  std::vector<IterationRecord> iterations;
  std::string stop_reason;
};

struct AcceptDecision {
  bool accepted = false;
  std::string reason;  // first failed criterion when rejected
  RuleStats train_stats;
  RuleStats val_stats;
};

/// Midpoints between consecutive sorted distinct values of `feature` over the
/// remaining samples; empty when fewer than 2 distinct values exist.
std::vector<double> candidate_thresholds(const Dataset& remaining, int feature);

/// Greedy literal growth against F-Beta on the remaining training samples.
/// May return a rule with zero literals when no candidate strictly improves
/// the match-all baseline; the covering loop treats that as a rejection.
Rule grow_rule(const Dataset& train_remaining, ClassId target, const InductionConfig& cfg);

/// Acceptance gate: train coverage, then validation coverage, then validation
/// accuracy, all inclusive bounds; the reason names the first failed check.
AcceptDecision accept_rule(const Rule& rule, ClassId target, const Dataset& train_remaining,
                           const Dataset& val_remaining, const InductionConfig& cfg);

/// Zero-literal majority rule over `remaining`; falls back to the majority of
/// `original_train` when nothing remains.
Rule default_rule(const Dataset& remaining, const Dataset& original_train);

/// Full sequential-covering loop; returns the decision list (default rule
/// last) plus a per-iteration audit trace.
std::pair<RuleSet, InductionTrace> induce_ruleset(const Dataset& train, const Dataset& val,
                                                  const InductionConfig& cfg);

namespace detail {

struct CoveringResult {
  std::vector<Rule> rules;
  Dataset train_remaining;
  Dataset val_remaining;  // empty dataset when running without validation
  InductionTrace trace;
};

// Shared engine. `val == nullptr` drops every validation-side criterion
// (used by personalization). cfg arrives pre-adjusted by the caller.
CoveringResult run_covering(const Dataset& train, const Dataset* val,
                            const InductionConfig& cfg, RuleKind kind);

}  // namespace detail

}  // namespace mira
