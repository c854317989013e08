#include "mira/inference.hpp"

#include <stdexcept>

#include "mira/text.hpp"

namespace mira {

Prediction predict(const RuleSet& rs, const FeatureVector& x) {
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    if (rs.rules[i].covers(x)) {
      return {rs.rules[i].predicted_class, static_cast<int>(i),
              rs.rules[i].kind == RuleKind::Default};
    }
  }
  throw std::logic_error("decision list without a firing rule");  // unreachable on a valid set
}

std::vector<RuleEvalTrace> explain(const RuleSet& rs, const FeatureVector& x) {
  std::vector<RuleEvalTrace> trace;
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    const Rule& r = rs.rules[i];
    RuleEvalTrace t;
    t.rule_index = static_cast<int>(i);
    bool all_hold = true;
    for (const Literal& lit : r.literals) {
      LiteralEval ev{lit.feature, lit.op, lit.threshold, x[lit.feature], lit.holds(x)};
      all_hold = all_hold && ev.holds;
      t.literals.push_back(ev);
    }
    t.fired = all_hold;
    trace.push_back(std::move(t));
    if (all_hold) break;
  }
  return trace;
}

EvalReport evaluate(const RuleSet& rs, const Dataset& ds) {
  if (ds.alphabet() != rs.alphabet)
    throw std::invalid_argument("alphabet mismatch between rule set and dataset");

  const int k = ds.num_classes();
  EvalReport rep;
  rep.confusion.assign(static_cast<std::size_t>(k), std::vector<long>(static_cast<std::size_t>(k), 0));
  rep.per_rule.assign(rs.rules.size(), RuleStats{});

  long correct = 0;
  for (const LabeledSample& s : ds.samples()) {
    Prediction p = predict(rs, s.features);
    ++rep.confusion[static_cast<std::size_t>(s.label)][static_cast<std::size_t>(p.label)];
    RuleStats& stats = rep.per_rule[static_cast<std::size_t>(p.fired_rule_index)];
    ++stats.covered;
    if (p.label == s.label) {
      ++stats.correct;
      ++correct;
    }
  }
  rep.accuracy = ds.empty() ? 0.0 : static_cast<double>(correct) / ds.size();

  rep.precision.assign(static_cast<std::size_t>(k), 0.0);
  rep.recall.assign(static_cast<std::size_t>(k), 0.0);
  for (int c = 0; c < k; ++c) {
    long col = 0;
    long row = 0;
    for (int r = 0; r < k; ++r) {
      col += rep.confusion[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      row += rep.confusion[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    }
    long diag = rep.confusion[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    rep.precision[static_cast<std::size_t>(c)] =
        col > 0 ? static_cast<double>(diag) / static_cast<double>(col) : 0.0;
    rep.recall[static_cast<std::size_t>(c)] =
        row > 0 ? static_cast<double>(diag) / static_cast<double>(row) : 0.0;
  }
  return rep;
}

std::string format_rule(const Rule& r, const std::vector<std::string>& alphabet) {
  const std::string& cls = alphabet.at(static_cast<std::size_t>(r.predicted_class));
  if (r.kind == RuleKind::Default) return "ELSE " + cls;
  std::string out = "IF ";
  for (std::size_t i = 0; i < r.literals.size(); ++i) {
    const Literal& lit = r.literals[i];
    if (i > 0) out += " AND ";
    out += feature_names()[static_cast<std::size_t>(lit.feature)];
    out += ' ';
    out += op_token(lit.op);
    out += ' ';
    out += format_double(lit.threshold);
  }
  out += " THEN " + cls;
  return out;
}

std::string format_rules(const RuleSet& rs) {
  std::string out;
  for (const Rule& r : rs.rules) {
    out += format_rule(r, rs.alphabet);
    out += '\n';
  }
  return out;
}

}  // namespace mira
