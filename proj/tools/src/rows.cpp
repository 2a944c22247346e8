#include "rows.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <tuple>

#include "bpl/errors.hpp"
#include "bpl/parallel.hpp"

#ifndef BPL_VERSION
#define BPL_VERSION "unknown"
#endif

namespace bpl::cli {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void sort_rows(std::vector<ResultRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.family, a.n, a.L, a.target, a.delta, a.gamma, a.method, a.seed) <
           std::tie(b.family, b.n, b.L, b.target, b.delta, b.gamma, b.method, b.seed);
  });
}

void write_csv(const std::string& path, const std::vector<ResultRow>& rows) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    out << r.family << ',' << r.n << ',' << r.L << ',' << format_double(r.gamma)
        << ',' << format_double(r.delta) << ',' << r.target << ','
        << format_double(r.estimate) << ',' << format_double(r.std_err) << ','
        << r.samples << ',' << r.seed << ',' << r.method << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_real(const std::string& s, std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE)
    throw ConfigError("line " + std::to_string(line_no) + ": bad number '" + s + "'");
  return v;
}

long long parse_integer(const std::string& s, std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE)
    throw ConfigError("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  return v;
}

unsigned long long parse_unsigned(const std::string& s, std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE)
    throw ConfigError("line " + std::to_string(line_no) + ": bad count '" + s + "'");
  return v;
}

}  // namespace

std::vector<ResultRow> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader)
    throw ConfigError(path + ": not a result CSV (unexpected header)");

  std::vector<ResultRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 11)
      throw ConfigError(path + ": line " + std::to_string(line_no) +
                        ": expected 11 fields, got " + std::to_string(f.size()));
    ResultRow r;
    r.family = f[0];
    r.n = static_cast<int>(parse_integer(f[1], line_no));
    r.L = static_cast<int>(parse_integer(f[2], line_no));
    r.gamma = parse_real(f[3], line_no);
    r.delta = parse_real(f[4], line_no);
    r.target = f[5];
    r.estimate = parse_real(f[6], line_no);
    r.std_err = parse_real(f[7], line_no);
    r.samples = parse_unsigned(f[8], line_no);
    r.seed = parse_unsigned(f[9], line_no);
    r.method = f[10];
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_meta(const std::string& csv_path, const std::string& command,
                double wall_seconds) {
  const std::string path = csv_path + ".meta";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", wall_seconds);
  out << "command=" << command << '\n'
      << "version=" << BPL_VERSION << '\n'
      << "workers=" << worker_count() << '\n'
      << "wall_seconds=" << buf << '\n';
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace bpl::cli
