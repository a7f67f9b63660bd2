#pragma once

#include <string>
#include <vector>

#include "sgspec/catalog.hpp"

// Self-contained verification suites. Each suite runs a batch of named checks
// against the catalog (and, where relevant, the Julia-set cover or the graph
// oracle) and reports every outcome; a suite passes only if all of its checks
// do. The CLI `verify` subcommand and the acceptance binary are both thin
// wrappers over these functions.

namespace sgspec {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // one-line diagnostic, filled on failure and for reported figures
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;

  void add(const std::string& name, bool ok, const std::string& detail = "");
};

struct VerifyOptions {
  std::int64_t table_k_max = 64;     // cycles examined row by row
  std::int64_t lemma_n_max = 64;     // odd-index range 2n-1 in the scaling identity
  int lemma_j_max = 6;               // dyadic exponent range
  std::int64_t theorem_ell_max = 32; // base intervals probed
  int theorem_m_max = 6;             // renormalization steps per probe
  int theorem_scale_lo = -3;         // 5^n translates of each base interval
  int theorem_scale_hi = 3;
  int julia_exhaustion_depth = 20;   // cover + gaps additivity depth
  int julia_measure_depth = 30;      // geometric decay bound depth
  std::int64_t julia_ell_max = 32;   // interval correspondence range
  int oracle_level_max = 5;
};

SuiteReport verify_numerics(const VerifyOptions& opt = {});
SuiteReport verify_table(SpectrumCatalog& cat, const VerifyOptions& opt = {});
SuiteReport verify_lemma(SpectrumCatalog& cat, const VerifyOptions& opt = {});
SuiteReport verify_theorem_suite(SpectrumCatalog& cat, const VerifyOptions& opt = {});
SuiteReport verify_julia(SpectrumCatalog& cat, const VerifyOptions& opt = {});
SuiteReport verify_oracle(SpectrumCatalog& cat, const VerifyOptions& opt = {});
std::vector<SuiteReport> verify_all(SpectrumCatalog& cat, const VerifyOptions& opt = {});

}  // namespace sgspec
