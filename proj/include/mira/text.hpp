#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mira {

/// Shortest decimal that parses back to the exact same double.
std::string format_double(double v);

// Strict numeric parsing: the whole token must be consumed. Each throws
// std::invalid_argument mentioning the offending token.
double parse_double(std::string_view tok);
long parse_long(std::string_view tok);
std::uint64_t parse_uint64(std::string_view tok);
bool parse_bool(std::string_view tok);  // "true" / "false"

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);  // keeps empty fields

struct KvLine {
  int line_no = 0;  // 1-based
  std::string key;
  std::string value;
};

/// Parses `key = value` lines; blank lines and lines starting with '#' are
/// skipped. Throws on a line without '='.
std::vector<KvLine> parse_kv_lines(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace mira
