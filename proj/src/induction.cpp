#include "mira/induction.hpp"

#include <algorithm>
#include <stdexcept>

#include "mira/scoring.hpp"

namespace mira {

std::vector<double> candidate_thresholds(const Dataset& remaining, int feature) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(remaining.size()));
  for (const LabeledSample& s : remaining.samples()) values.push_back(s.features[feature]);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<double> mids;
  if (values.size() < 2) return mids;
  mids.reserve(values.size() - 1);
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    mids.push_back((values[i] + values[i + 1]) / 2.0);
  return mids;
}

namespace {

struct Candidate {
  double score = -1.0;
  long tp = 0;
  long fp = 0;
  int feature = 0;
  LiteralOp op = LiteralOp::LessEq;
  double threshold = 0.0;
  bool valid = false;
};

// Deterministic preference: higher F-Beta, then lower fp, then feature order,
// then lower threshold, then <= before >.
bool better(const Candidate& a, const Candidate& b) {
  if (!b.valid) return true;
  if (a.score != b.score) return a.score > b.score;
  if (a.fp != b.fp) return a.fp < b.fp;
  if (a.feature != b.feature) return a.feature < b.feature;
  if (a.threshold != b.threshold) return a.threshold < b.threshold;
  return a.op < b.op;
}

struct SweepEntry {
  double value;
  bool in_conjunction;
  bool is_target;
};

}  // namespace

Rule grow_rule(const Dataset& train_remaining, ClassId target, const InductionConfig& cfg) {
  const int n = train_remaining.size();
  if (train_remaining.count_of(target) == 0)
    throw std::invalid_argument("target class absent from the remaining training samples");

  const long n_target = train_remaining.count_of(target);
  std::vector<char> in_conj(static_cast<std::size_t>(n), 1);

  Rule rule;
  rule.kind = RuleKind::Specific;
  rule.predicted_class = target;

  long conj_tp = n_target;
  long conj_fp = n - n_target;
  double current_score = fbeta_counts(conj_tp, conj_fp, n_target - conj_tp, cfg.beta);

  std::vector<SweepEntry> entries(static_cast<std::size_t>(n));
  while (static_cast<int>(rule.literals.size()) < cfg.max_literals) {
    Candidate best;
    for (int f = 0; f < kNumFeatures; ++f) {
      for (int i = 0; i < n; ++i) {
        const LabeledSample& s = train_remaining[i];
        entries[static_cast<std::size_t>(i)] = {s.features[f],
                                                in_conj[static_cast<std::size_t>(i)] != 0,
                                                s.label == target};
      }
      std::sort(entries.begin(), entries.end(),
                [](const SweepEntry& a, const SweepEntry& b) { return a.value < b.value; });

      // Walk distinct values; each boundary midpoint is a candidate threshold,
      // identical arithmetic to candidate_thresholds().
      long cum_tp = 0;
      long cum_fp = 0;
      std::size_t i = 0;
      while (i < entries.size()) {
        double v = entries[i].value;
        while (i < entries.size() && entries[i].value == v) {
          if (entries[i].in_conjunction) {
            if (entries[i].is_target)
              ++cum_tp;
            else
              ++cum_fp;
          }
          ++i;
        }
        if (i == entries.size()) break;
        double threshold = (v + entries[i].value) / 2.0;

        Candidate le{fbeta_counts(cum_tp, cum_fp, n_target - cum_tp, cfg.beta),
                     cum_tp,
                     cum_fp,
                     f,
                     LiteralOp::LessEq,
                     threshold,
                     true};
        if (better(le, best)) best = le;

        long gt_tp = conj_tp - cum_tp;
        long gt_fp = conj_fp - cum_fp;
        Candidate gt{fbeta_counts(gt_tp, gt_fp, n_target - gt_tp, cfg.beta),
                     gt_tp,
                     gt_fp,
                     f,
                     LiteralOp::Greater,
                     threshold,
                     true};
        if (better(gt, best)) best = gt;
      }
    }

    if (!best.valid || best.score <= current_score) break;

    Literal lit{best.feature, best.op, best.threshold};
    rule.literals.push_back(lit);
    for (int i = 0; i < n; ++i)
      if (in_conj[static_cast<std::size_t>(i)] && !lit.holds(train_remaining[i].features))
        in_conj[static_cast<std::size_t>(i)] = 0;
    conj_tp = best.tp;
    conj_fp = best.fp;
    current_score = best.score;
  }

  rule.train_stats = {conj_tp + conj_fp, conj_tp};
  return rule;
}

namespace {

AcceptDecision accept_impl(const Rule& rule, ClassId target, const Dataset& train_remaining,
                           const Dataset* val_remaining, const InductionConfig& cfg) {
  if (rule.literals.empty())
    throw std::invalid_argument("acceptance requires a rule with at least one literal");

  AcceptDecision d;
  RuleConfusion train_conf = rule_confusion(rule, target, train_remaining);
  d.train_stats = {train_conf.covered(), train_conf.tp};
  if (train_conf.covered() < cfg.min_train_coverage) {
    d.reason = "train coverage";
    return d;
  }

  if (val_remaining != nullptr) {
    RuleConfusion val_conf = rule_confusion(rule, target, *val_remaining);
    d.val_stats = {val_conf.covered(), val_conf.tp};
    if (val_conf.covered() < cfg.min_val_coverage) {
      d.reason = "val coverage";
      return d;
    }
    if (rule_accuracy(val_conf) < cfg.min_val_accuracy) {
      d.reason = "val accuracy";
      return d;
    }
  }

  d.accepted = true;
  return d;
}

}  // namespace

AcceptDecision accept_rule(const Rule& rule, ClassId target, const Dataset& train_remaining,
                           const Dataset& val_remaining, const InductionConfig& cfg) {
  return accept_impl(rule, target, train_remaining, &val_remaining, cfg);
}

Rule default_rule(const Dataset& remaining, const Dataset& original_train) {
  const Dataset& majority_source = remaining.empty() ? original_train : remaining;
  Rule rule;
  rule.kind = RuleKind::Default;
  if (auto cls = majority_source.majority_class()) {
    rule.predicted_class = *cls;
  } else if (original_train.num_classes() > 0 || remaining.num_classes() > 0) {
    rule.predicted_class = 0;
  } else {
    throw std::invalid_argument("default rule needs an alphabet");
  }
  rule.train_stats = {remaining.size(),
                      remaining.empty() ? 0 : remaining.count_of(rule.predicted_class)};
  return rule;
}

namespace detail {

CoveringResult run_covering(const Dataset& train, const Dataset* val,
                            const InductionConfig& cfg, RuleKind kind) {
  CoveringResult res;
  res.train_remaining = train;
  if (val != nullptr) res.val_remaining = *val;

  int iteration = 0;
  while (true) {
    if (static_cast<int>(res.rules.size()) >= cfg.max_rules) {
      res.trace.stop_reason = "max rules reached";
      break;
    }
    if (res.train_remaining.size() < cfg.min_train_remaining) {
      res.trace.stop_reason = "train remainder below minimum";
      break;
    }
    if (val != nullptr && res.val_remaining.size() < cfg.min_val_remaining) {
      res.trace.stop_reason = "validation remainder below minimum";
      break;
    }
    if (res.train_remaining.distinct_classes_present() < 2) {
      res.trace.stop_reason = "single-class remainder";
      break;
    }

    IterationRecord rec;
    rec.iteration = iteration;
    rec.class_scores = score_classes(res.train_remaining, cfg);
    rec.train_remaining = res.train_remaining.size();
    rec.val_remaining = res.val_remaining.size();
    if (rec.class_scores.empty()) {
      res.trace.stop_reason = "no scorable class";
      res.trace.iterations.push_back(std::move(rec));
      break;
    }
    const ClassScore target = pick_best_class(rec.class_scores);
    rec.selected_class = target.cls;

    Rule rule = grow_rule(res.train_remaining, target.cls, cfg);
    rule.kind = kind;
    rec.rule = rule;

    if (rule.literals.empty()) {
      rec.rejection_reason = "no improving literal";
      res.trace.stop_reason = "rule rejected: no improving literal";
      res.trace.iterations.push_back(std::move(rec));
      break;
    }

    AcceptDecision decision =
        accept_impl(rule, target.cls, res.train_remaining, val, cfg);
    if (!decision.accepted) {
      rec.rejection_reason = decision.reason;
      res.trace.stop_reason = "rule rejected: " + decision.reason;
      res.trace.iterations.push_back(std::move(rec));
      break;
    }

    rule.train_stats = decision.train_stats;
    if (val != nullptr) rule.val_stats = decision.val_stats;

    std::vector<int> kept_train;
    for (int i = 0; i < res.train_remaining.size(); ++i) {
      if (rule.covers(res.train_remaining[i].features))
        rec.covered_train_ids.push_back(res.train_remaining[i].sample_id);
      else
        kept_train.push_back(i);
    }
    res.train_remaining = res.train_remaining.subset(kept_train);

    if (val != nullptr) {
      std::vector<int> kept_val;
      for (int i = 0; i < res.val_remaining.size(); ++i) {
        if (rule.covers(res.val_remaining[i].features))
          rec.covered_val_ids.push_back(res.val_remaining[i].sample_id);
        else
          kept_val.push_back(i);
      }
      res.val_remaining = res.val_remaining.subset(kept_val);
    }

    rec.accepted = true;
    rec.rule = rule;
    rec.train_remaining = res.train_remaining.size();
    rec.val_remaining = res.val_remaining.size();
    res.rules.push_back(std::move(rule));
    res.trace.iterations.push_back(std::move(rec));
    ++iteration;
  }

  return res;
}

}  // namespace detail

std::pair<RuleSet, InductionTrace> induce_ruleset(const Dataset& train, const Dataset& val,
                                                  const InductionConfig& cfg) {
  validate_config(cfg);
  if (train.empty()) throw std::invalid_argument("training dataset is empty");
  if (val.empty()) throw std::invalid_argument("validation dataset is empty");
  if (train.alphabet() != val.alphabet())
    throw std::invalid_argument("alphabet mismatch between training and validation datasets");

  detail::CoveringResult res = detail::run_covering(train, &val, cfg, RuleKind::Specific);

  Rule fallback = default_rule(res.train_remaining, train);
  fallback.val_stats = RuleStats{
      res.val_remaining.size(),
      res.val_remaining.empty() ? 0 : res.val_remaining.count_of(fallback.predicted_class)};

  RuleSet rs;
  rs.rules = std::move(res.rules);
  rs.rules.push_back(std::move(fallback));
  rs.config = cfg;
  rs.alphabet = train.alphabet();
  rs.validate();
  return {std::move(rs), std::move(res.trace)};
}

}  // namespace mira
