#pragma once

#include "mira/core.hpp"
#include "mira/induction.hpp"

namespace mira {

/// Calibration samples not covered by any non-default rule, i.e. the ones
/// that would fall through to the default rule.
Dataset calibration_residuals(const RuleSet& rs, const Dataset& calib);

/// Appends up to cfg.max_personal_rules rules induced from the residual
/// calibration samples, then recomputes the default rule. Foundational
/// specific rules keep their positions, so any sample they classify keeps its
/// prediction. Returns rs unchanged when the residual is empty.
RuleSet personalize(const RuleSet& rs, const Dataset& calib, const InductionConfig& cfg);

/// Same, with the covering trace exposed for auditing.
RuleSet personalize(const RuleSet& rs, const Dataset& calib, const InductionConfig& cfg,
                    InductionTrace* trace_out);

}  // namespace mira
