#pragma once

#include "mira/core.hpp"

namespace mira {

// Versioned line-oriented rule file:
//   mira-rules v1
//   alphabet = SwipeLeft,SwipeRight,...
//   <config echo, key = value>
//   RULE <idx> <kind> IF <feature> <op> <threshold> [AND ...] THEN <class> ; train=<c>/<c> [val=<c>/<c>]
//   ELSE <class> ; train=<c>/<c> [val=<c>/<c>]
// Thresholds use the shortest decimal that round-trips, so parsing restores
// the exact doubles.
std::string serialize_rules(const RuleSet& rs);
RuleSet parse_rules(const std::string& text);

RuleSet load_rules(const std::string& path);
void save_rules(const RuleSet& rs, const std::string& path);

}  // namespace mira
