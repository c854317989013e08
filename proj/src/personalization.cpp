#include "mira/personalization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mira {

Dataset calibration_residuals(const RuleSet& rs, const Dataset& calib) {
  rs.validate();
  if (calib.empty()) throw std::invalid_argument("calibration dataset is empty");
  if (calib.alphabet() != rs.alphabet)
    throw std::invalid_argument("alphabet mismatch between rule set and calibration data");

  std::vector<int> residual_positions;
  for (int i = 0; i < calib.size(); ++i) {
    bool covered = false;
    for (const Rule& r : rs.rules) {
      if (r.kind == RuleKind::Default) continue;
      if (r.covers(calib[i].features)) {
        covered = true;
        break;
      }
    }
    if (!covered) residual_positions.push_back(i);
  }
  return calib.subset(residual_positions);
}

RuleSet personalize(const RuleSet& rs, const Dataset& calib, const InductionConfig& cfg) {
  return personalize(rs, calib, cfg, nullptr);
}

RuleSet personalize(const RuleSet& rs, const Dataset& calib, const InductionConfig& cfg,
                    InductionTrace* trace_out) {
  validate_config(cfg);
  Dataset residual = calibration_residuals(rs, calib);
  if (residual.empty()) {
    if (trace_out != nullptr) trace_out->stop_reason = "empty residual";
    return rs;
  }

  // Calibration sets are small, so acceptance runs on the training side only
  // and the coverage floor scales with the residual size unless pinned.
  InductionConfig personal = cfg;
  personal.max_rules = cfg.max_personal_rules;
  personal.min_train_coverage =
      cfg.personal_min_train_coverage > 0
          ? cfg.personal_min_train_coverage
          : std::max(2, static_cast<int>(std::ceil(0.08 * residual.size())));
  personal.min_train_remaining = cfg.personal_min_train_remaining;

  detail::CoveringResult res =
      detail::run_covering(residual, nullptr, personal, RuleKind::Personalized);
  if (trace_out != nullptr) *trace_out = res.trace;

  RuleSet out;
  out.config = rs.config;
  out.alphabet = rs.alphabet;
  out.rules.reserve(rs.rules.size() + res.rules.size());
  for (const Rule& r : rs.rules)
    if (r.kind != RuleKind::Default) out.rules.push_back(r);
  for (Rule& r : res.rules) out.rules.push_back(std::move(r));

  // New default: majority over what the personalized rules left uncovered,
  // falling back to the foundational default class.
  Rule fallback;
  fallback.kind = RuleKind::Default;
  if (auto cls = res.train_remaining.majority_class()) {
    fallback.predicted_class = *cls;
    fallback.train_stats = {res.train_remaining.size(),
                            res.train_remaining.count_of(*cls)};
  } else {
    fallback.predicted_class = rs.default_rule().predicted_class;
    fallback.train_stats = {0, 0};
  }
  out.rules.push_back(std::move(fallback));
  out.validate();
  return out;
}

}  // namespace mira
