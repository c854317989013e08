#include "mira/config_io.hpp"

#include <stdexcept>

#include "mira/text.hpp"

namespace mira {

bool apply_config_key(InductionConfig& cfg, const std::string& key, const std::string& value) {
  auto as_int = [&] { return static_cast<int>(parse_long(value)); };
  if (key == "max_rules")
    cfg.max_rules = as_int();
  else if (key == "max_literals")
    cfg.max_literals = as_int();
  else if (key == "min_train_coverage")
    cfg.min_train_coverage = as_int();
  else if (key == "min_val_coverage")
    cfg.min_val_coverage = as_int();
  else if (key == "min_val_accuracy")
    cfg.min_val_accuracy = parse_double(value);
  else if (key == "min_train_remaining")
    cfg.min_train_remaining = as_int();
  else if (key == "min_val_remaining")
    cfg.min_val_remaining = as_int();
  else if (key == "beta")
    cfg.beta = parse_double(value);
  else if (key == "lambda1")
    cfg.lambda1 = parse_double(value);
  else if (key == "lambda2")
    cfg.lambda2 = parse_double(value);
  else if (key == "lambda3")
    cfg.lambda3 = parse_double(value);
  else if (key == "max_personal_rules")
    cfg.max_personal_rules = as_int();
  else if (key == "seed")
    cfg.seed = parse_uint64(value);
  else if (key == "nearest_cluster_b")
    cfg.nearest_cluster_b = parse_bool(value);
  else if (key == "normalize_features")
    cfg.normalize_features = parse_bool(value);
  else if (key == "personal_min_train_coverage")
    cfg.personal_min_train_coverage = as_int();
  else if (key == "personal_min_train_remaining")
    cfg.personal_min_train_remaining = as_int();
  else
    return false;
  return true;
}

InductionConfig parse_config(const std::string& text) {
  InductionConfig cfg;
  for (const KvLine& kv : parse_kv_lines(text)) {
    if (!apply_config_key(cfg, kv.key, kv.value))
      throw std::invalid_argument("line " + std::to_string(kv.line_no) +
                                  ": unknown config key '" + kv.key + "'");
  }
  validate_config(cfg);
  return cfg;
}

InductionConfig load_config(const std::string& path) {
  try {
    return parse_config(read_file(path));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string config_to_text(const InductionConfig& cfg) {
  std::string out;
  auto line = [&out](const char* key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  line("max_rules", std::to_string(cfg.max_rules));
  line("max_literals", std::to_string(cfg.max_literals));
  line("min_train_coverage", std::to_string(cfg.min_train_coverage));
  line("min_val_coverage", std::to_string(cfg.min_val_coverage));
  line("min_val_accuracy", format_double(cfg.min_val_accuracy));
  line("min_train_remaining", std::to_string(cfg.min_train_remaining));
  line("min_val_remaining", std::to_string(cfg.min_val_remaining));
  line("beta", format_double(cfg.beta));
  line("lambda1", format_double(cfg.lambda1));
  line("lambda2", format_double(cfg.lambda2));
  line("lambda3", format_double(cfg.lambda3));
  line("max_personal_rules", std::to_string(cfg.max_personal_rules));
  line("seed", std::to_string(cfg.seed));
  line("nearest_cluster_b", cfg.nearest_cluster_b ? "true" : "false");
  line("normalize_features", cfg.normalize_features ? "true" : "false");
  line("personal_min_train_coverage", std::to_string(cfg.personal_min_train_coverage));
  line("personal_min_train_remaining", std::to_string(cfg.personal_min_train_remaining));
  return out;
}

}  // namespace mira
