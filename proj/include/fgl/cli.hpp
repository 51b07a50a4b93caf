#ifndef FGL_CLI_HPP
#define FGL_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgl/rational.hpp"

namespace fgl {

// Parsed command line. Rationals stay as strings here; run_cli validates and
// reports bad fields by name.
struct RunConfig {
  std::string subcommand;  // simulate | exact | conditional | count-trees | sample-tree | bijection
  std::optional<int> n;
  std::optional<std::string> p;        // rational "a/b" or "a"
  std::optional<std::string> p_list;   // comma-separated rationals
  std::optional<std::string> pi;       // comma-separated rationals, defaults uniform
  std::optional<std::string> p_sweep;  // simulate only: one estimate per value
  std::optional<int> k;                // conditional only
  std::uint64_t trials = 100000;
  std::optional<std::uint64_t> seed;   // falls back to env FGL_SEED, then 0
  int workers = 1;
  std::optional<int> limit_override;
  std::optional<std::string> tree_parent;  // bijection: 1-based parents of vertices 1..n-1
  std::optional<std::string> forest_out;   // bijection: 1-based targets, 0 = no edge
  std::string format = "json";             // json | csv
  bool timing = false;  // measure elapsed_ms (breaks byte-reproducibility of reports)
};

struct CliResult {
  int exit_code = 0;    // 0 ok, 2 validation, 3 size limit, 4 claim check failed
  std::string report;   // serialized report (also produced on exit 4)
  std::string error;    // human-readable message for nonzero exits
};

CliResult run_cli(const RunConfig& config);

// "1/2,1/3,..." -> rationals; errors name `field`.
std::vector<Rational> parse_rational_list(const std::string& text, const std::string& field);

}  // namespace fgl

#endif
