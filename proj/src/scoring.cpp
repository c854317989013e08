#include "mira/scoring.hpp"

#include <stdexcept>

namespace mira {

RuleConfusion rule_confusion(const Rule& rule, ClassId target, const Dataset& ds) {
  RuleConfusion c;
  for (const LabeledSample& s : ds.samples()) {
    bool covered = rule.covers(s.features);
    bool is_target = (s.label == target);
    if (covered && is_target)
      ++c.tp;
    else if (covered)
      ++c.fp;
    else if (is_target)
      ++c.fn;
    else
      ++c.tn;
  }
  return c;
}

double fbeta_counts(long tp, long fp, long fn, double beta) {
  if (tp == 0) return 0.0;
  const double b2 = beta * beta;
  const double tpd = static_cast<double>(tp);
  return (1.0 + b2) * tpd / ((1.0 + b2) * tpd + b2 * static_cast<double>(fn) +
                             static_cast<double>(fp));
}

double fbeta(const RuleConfusion& c, double beta) {
  return fbeta_counts(c.tp, c.fp, c.fn, beta);
}

double rule_coverage(const RuleConfusion& c) {
  if (c.total() < 1) throw std::invalid_argument("coverage needs a non-empty dataset");
  return static_cast<double>(c.covered()) / static_cast<double>(c.total());
}

double rule_accuracy(const RuleConfusion& c) {
  if (c.covered() == 0) throw std::invalid_argument("rule covers no samples");
  return static_cast<double>(c.tp) / static_cast<double>(c.covered());
}

}  // namespace mira
