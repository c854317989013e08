#include "mira/text.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mira {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view tok) {
  double v = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw std::invalid_argument("not a number: '" + std::string(tok) + "'");
  return v;
}

long parse_long(std::string_view tok) {
  long v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw std::invalid_argument("not an integer: '" + std::string(tok) + "'");
  return v;
}

std::uint64_t parse_uint64(std::string_view tok) {
  std::uint64_t v = 0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw std::invalid_argument("not an unsigned integer: '" + std::string(tok) + "'");
  return v;
}

bool parse_bool(std::string_view tok) {
  if (tok == "true") return true;
  if (tok == "false") return false;
  throw std::invalid_argument("not a boolean: '" + std::string(tok) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::vector<KvLine> parse_kv_lines(std::string_view text) {
  std::vector<KvLine> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = end == std::string_view::npos ? text.substr(start)
                                                          : text.substr(start, end - start);
    ++line_no;
    std::string_view t = trim(line);
    if (!t.empty() && t.front() != '#') {
      std::size_t eq = t.find('=');
      if (eq == std::string_view::npos)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected 'key = value', got '" + std::string(t) + "'");
      KvLine kv;
      kv.line_no = line_no;
      kv.key = std::string(trim(t.substr(0, eq)));
      kv.value = std::string(trim(t.substr(eq + 1)));
      if (kv.key.empty())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": empty key");
      out.push_back(std::move(kv));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace mira
