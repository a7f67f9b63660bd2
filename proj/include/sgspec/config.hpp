#pragma once

#include <string>

namespace sgspec {

// Runtime knobs shared by the CLI subcommands. Values left at their defaults
// here are overridden first by a JSON config file (--config), then by any
// explicit command-line flags, in that order.
struct RunConfig {
  double psi_rel_tol = 1e-14;
  double count_rel_tol = 1e-9;
  std::int64_t ell_max = 1024;  // search bound for interval location
  int cover_depth_cap = 40;
  int oracle_level_cap = 6;
  std::string format = "csv";  // "csv" or "json"
  std::string output;          // empty means stdout

  void validate() const;  // throws std::invalid_argument on bad values
};

RunConfig load_config(const std::string& path);  // JSON object, unknown keys rejected

}  // namespace sgspec
