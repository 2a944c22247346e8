#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bpl::cli {

// One output record. The CSV schema is the CLI's contract: every command
// emits these rows and nothing else goes into the data file.
struct ResultRow {
  std::string family;
  int n = 0;
  int L = 0;
  double gamma = 0.0;
  double delta = 0.0;
  std::string target;
  double estimate = 0.0;
  double std_err = 0.0;  // "stderr" is a <cstdio> macro; field renamed only here
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string method;
};

inline constexpr const char* kCsvHeader =
    "family,n,L,gamma,delta,target,estimate,stderr,samples,seed,method";

// Shortest text that round-trips a double (printf %.17g, C locale).
std::string format_double(double v);

// Deterministic total order: (family, n, L, target, delta, gamma, method,
// seed). The leading four keys are the row identity; the rest break ties
// between traces that share them (e.g. two delta values of one family).
void sort_rows(std::vector<ResultRow>& rows);

// Write header + rows. No timestamps, no locale dependence: re-running a
// command with identical configuration yields a byte-identical file.
// Throws IoError when the file cannot be written.
void write_csv(const std::string& path, const std::vector<ResultRow>& rows);

// Parse a file produced by write_csv. Throws IoError when unreadable and
// ConfigError on schema violations (wrong header, wrong field count, or
// non-numeric values).
std::vector<ResultRow> read_csv(const std::string& path);

// Run metadata sidecar at `csv_path + ".meta"`: command, library version,
// worker count, wall time. Kept out of the CSV so data files stay
// byte-identical across reruns.
void write_meta(const std::string& csv_path, const std::string& command,
                double wall_seconds);

}  // namespace bpl::cli
