#pragma once

#include "mira/core.hpp"

namespace mira {

struct RuleConfusion {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;

  long covered() const { return tp + fp; }
  long total() const { return tp + fp + fn + tn; }
  bool operator==(const RuleConfusion&) const = default;
};

/// Counts of `rule` treated as a detector for `target` over `ds`.
RuleConfusion rule_confusion(const Rule& rule, ClassId target, const Dataset& ds);

/// F-Beta from precision/recall; 0 whenever tp == 0.
double fbeta(const RuleConfusion& c, double beta);
double fbeta_counts(long tp, long fp, long fn, double beta);

double rule_coverage(const RuleConfusion& c);  // covered / total
double rule_accuracy(const RuleConfusion& c);  // tp / covered; throws when covered == 0

}  // namespace mira
