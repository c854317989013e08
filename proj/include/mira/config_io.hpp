#pragma once

#include "mira/core.hpp"

namespace mira {

/// `key = value` lines over the InductionConfig fields; starts from defaults,
/// rejects unknown keys, and validates the result.
InductionConfig parse_config(const std::string& text);
InductionConfig load_config(const std::string& path);

/// All fields, one per line, in a fixed order.
std::string config_to_text(const InductionConfig& cfg);

/// Applies one key/value pair; shared with the rule-file parser.
/// Returns false when the key is not a config field.
bool apply_config_key(InductionConfig& cfg, const std::string& key, const std::string& value);

}  // namespace mira
