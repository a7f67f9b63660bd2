#include <doctest.h>

#include "sgspec/verify.hpp"

using namespace sgspec;

namespace {
void require_all(const SuiteReport& rep) {
  CHECK(rep.pass);
  CHECK_FALSE(rep.checks.empty());
  for (const auto& c : rep.checks) {
    INFO(rep.suite, ": ", c.name, " (", c.detail, ")");
    CHECK(c.pass);
  }
}
}  // namespace

TEST_CASE("numerics suite") { require_all(verify_numerics()); }

TEST_CASE("table suite at reduced size") {
  SpectrumCatalog cat;
  VerifyOptions opt;
  opt.table_k_max = 8;
  const auto rep = verify_table(cat, opt);
  CHECK(rep.suite == "table");
  require_all(rep);
}

TEST_CASE("lemma suite at reduced size") {
  SpectrumCatalog cat;
  VerifyOptions opt;
  opt.lemma_n_max = 8;
  opt.lemma_j_max = 3;
  require_all(verify_lemma(cat, opt));
}

TEST_CASE("theorem suite at reduced size") {
  SpectrumCatalog cat;
  VerifyOptions opt;
  opt.theorem_ell_max = 4;
  opt.theorem_m_max = 4;
  opt.theorem_scale_lo = -2;
  opt.theorem_scale_hi = 2;
  require_all(verify_theorem_suite(cat, opt));
}

TEST_CASE("julia suite at reduced size") {
  SpectrumCatalog cat;
  VerifyOptions opt;
  opt.julia_exhaustion_depth = 10;
  opt.julia_measure_depth = 12;
  opt.julia_ell_max = 8;
  require_all(verify_julia(cat, opt));
}

TEST_CASE("oracle suite through level four") {
  SpectrumCatalog cat;
  VerifyOptions opt;
  opt.oracle_level_max = 4;
  require_all(verify_oracle(cat, opt));
}
