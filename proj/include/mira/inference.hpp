#pragma once

#include "mira/core.hpp"

namespace mira {

struct Prediction {
  ClassId label = 0;
  int fired_rule_index = 0;
  bool is_default = false;
};

struct LiteralEval {
  int feature = 0;
  LiteralOp op = LiteralOp::LessEq;
  double threshold = 0.0;
  double value = 0.0;
  bool holds = false;
};

struct RuleEvalTrace {
  int rule_index = 0;
  std::vector<LiteralEval> literals;
  bool fired = false;
};

struct EvalReport {
  double accuracy = 0.0;
  std::vector<std::vector<long>> confusion;  // [true class][predicted class]
  std::vector<RuleStats> per_rule;           // firing counts per rule index
  std::vector<double> precision;             // per class; 0 when undefined
  std::vector<double> recall;
};

/// First rule whose literals all hold; the trailing default guarantees a match.
Prediction predict(const RuleSet& rs, const FeatureVector& x);

/// Literal truth table per rule, up to and including the fired rule.
std::vector<RuleEvalTrace> explain(const RuleSet& rs, const FeatureVector& x);

EvalReport evaluate(const RuleSet& rs, const Dataset& ds);  // throws on alphabet mismatch

/// "IF <feature> <op> <value> AND ... THEN <Class>"; "ELSE <Class>" for the default.
std::string format_rule(const Rule& r, const std::vector<std::string>& alphabet);
std::string format_rules(const RuleSet& rs);  // one line per rule

}  // namespace mira
