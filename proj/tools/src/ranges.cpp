#include "ranges.hpp"

#include <cerrno>
#include <cstdlib>

#include "bpl/errors.hpp"

namespace bpl::cli {

namespace {

constexpr std::size_t kMaxValues = 1u << 20;

int parse_one_int(const std::string& s) {
  errno = 0;
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE || v < -1000000 ||
      v > 1000000)
    throw ConfigError("bad integer '" + s + "' in range");
  return static_cast<int>(v);
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::vector<int> parse_int_values(const std::string& text) {
  if (text.empty()) throw ConfigError("empty range");

  if (text.find(',') != std::string::npos) {
    std::vector<int> values;
    for (const auto& tok : split_on(text, ',')) values.push_back(parse_one_int(tok));
    if (values.empty()) throw ConfigError("empty range '" + text + "'");
    return values;
  }

  const auto parts = split_on(text, ':');
  if (parts.size() > 3)
    throw ConfigError("range '" + text + "' must be A, A:B, or A:B:S");
  const int start = parse_one_int(parts[0]);
  const int stop = parts.size() >= 2 ? parse_one_int(parts[1]) : start;
  const int step = parts.size() == 3 ? parse_one_int(parts[2]) : 1;
  if (step < 1) throw ConfigError("range '" + text + "': step must be >= 1");
  if (start > stop)
    throw ConfigError("range '" + text + "': start exceeds stop");

  std::vector<int> values;
  for (long v = start; v <= stop; v += step) {
    values.push_back(static_cast<int>(v));
    if (values.size() > kMaxValues)
      throw ConfigError("range '" + text + "' is too large");
  }
  return values;
}

}  // namespace bpl::cli
