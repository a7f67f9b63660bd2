#include <doctest.h>

#include <array>
#include <stdexcept>

#include "sgspec/catalog.hpp"

using namespace sgspec;

TEST_CASE("cycle index factorization") {
  auto d = decompose(1);
  CHECK(d.j == 0);
  CHECK(d.ell == 1);
  d = decompose(12);
  CHECK(d.j == 2);
  CHECK(d.ell == 2);
  d = decompose(96);
  CHECK(d.j == 5);
  CHECK(d.ell == 2);
  CHECK_THROWS_AS(decompose(0), std::invalid_argument);
}

TEST_CASE("integer powers") {
  CHECK(pow3i(0) == 1);
  CHECK(pow3i(3) == 27);
  CHECK(pow5i(2) == 25);
  CHECK_THROWS_AS(pow3i(-1), std::invalid_argument);
}

TEST_CASE("catalog constructor validates the tolerance") {
  CHECK_THROWS_AS(SpectrumCatalog(0.0), std::invalid_argument);
  CHECK_THROWS_AS(SpectrumCatalog(1e-2), std::invalid_argument);
}

TEST_CASE("first cycle: values, multiplicities, labels") {
  SpectrumCatalog cat;
  const auto rows = cat.cycle_rows(1);

  CHECK(rows[0].value == doctest::Approx(16.8159988893484039742).epsilon(1e-13));
  CHECK(rows[1].value == doctest::Approx(27.11442539915777454609).epsilon(1e-13));
  CHECK(rows[2].value == doctest::Approx(55.88582745419460547278).epsilon(1e-13));
  CHECK(rows[7].value == doctest::Approx(279.4291372709730273639).epsilon(1e-13));
  CHECK(rows[8].value == doctest::Approx(677.8606349789443636523).epsilon(1e-13));

  const std::array<std::array<std::int64_t, 2>, 10> mults = {{{0, 1},
                                                              {2, 0},
                                                              {0, 2},
                                                              {3, 0},
                                                              {0, 2},
                                                              {2, 0},
                                                              {0, 1},
                                                              {1, 3},
                                                              {6, 3},
                                                              {1, 3}}};
  for (int r = 0; r < 10; ++r) {
    CHECK(rows[r].mult_neumann == mults[r][0]);
    CHECK(rows[r].mult_dirichlet == mults[r][1]);
    CHECK(rows[r].mult_tilde == mults[r][0] + mults[r][1]);
  }

  CHECK(rows[0].label() == "lam(2,1)");
  CHECK(rows[3].label() == "5*lam(3,1)");
  CHECK(rows[7].label() == "5*lam(5,1)");
  CHECK(rows[8].label() == "5^2*lam(3,1)");
}

TEST_CASE("second cycle carries the dyadic multiplicities") {
  SpectrumCatalog cat;
  const auto rows = cat.cycle_rows(2);  // k = 2 = 2^1 * 1
  CHECK(rows[7].mult_neumann == 4);
  CHECK(rows[7].mult_dirichlet == 6);
  CHECK(rows[8].mult_neumann == 15);
  CHECK(rows[8].mult_dirichlet == 12);
  CHECK(rows[9].mult_neumann == 4);
  CHECK(rows[9].mult_dirichlet == 6);
}

TEST_CASE("counting at and between catalog lines") {
  SpectrumCatalog cat;

  auto c = cat.count_at_line(3, 1, 2);  // 5^2 lam(3,1), ninth row of C_1
  CHECK(c.at_eigenvalue);
  CHECK(c.n_neumann == 15);
  CHECK(c.n_dirichlet == 12);
  CHECK(c.n_tilde == 27);

  c = cat.count(600.0);  // inside the gap below that line
  CHECK_FALSE(c.at_eigenvalue);
  CHECK(c.n_neumann == 9);
  CHECK(c.n_dirichlet == 9);
  CHECK(c.n_tilde == 18);

  c = cat.count(1e-9);  // only the zero line lies at or below
  CHECK_FALSE(c.at_eigenvalue);
  CHECK(c.n_neumann == 1);
  CHECK(c.n_dirichlet == 0);
  CHECK(c.n_tilde == 1);

  CHECK_THROWS_AS(cat.count(-1.0), std::invalid_argument);

  // 5 lam(2,1) is not a spectrum member; the call falls back to counting.
  c = cat.count_at_line(2, 1, 1);
  CHECK_FALSE(c.at_eigenvalue);
  CHECK(c.n_neumann == 3);
  CHECK(c.n_dirichlet == 3);
  CHECK(c.n_tilde == 6);
}

TEST_CASE("cumulative cover counts through rows") {
  SpectrumCatalog cat;
  CHECK(cat.cover_count_through_row(1, 9) == 27);
  CHECK(cat.cover_count_through_row(1, 10) == 31);
  CHECK(cat.cover_count_through_row(2, 9) == 81);
  CHECK_THROWS_AS(cat.cover_count_through_row(1, 11), std::invalid_argument);
}

TEST_CASE("neumann-dirichlet difference runs the same in every cycle") {
  SpectrumCatalog cat;
  const std::array<std::int64_t, 10> want = {0, 2, 0, 3, 1, 3, 2, 0, 3, 1};
  CHECK(cat.difference_profile(5) == want);
  CHECK(cat.difference_profile(12) == want);
}

TEST_CASE("spectrum listing and lazy growth") {
  SpectrumCatalog cat;
  const auto lines = cat.spectrum(3);
  CHECK(lines.size() == 31);  // zero line + three cycles
  CHECK(lines[0].label() == "zero");
  for (std::size_t i = 1; i < lines.size(); ++i) CHECK(lines[i - 1].value < lines[i].value);
  CHECK(cat.cycles_generated() >= 3);
  CHECK(cat.primitive_value(3, 1) == doctest::Approx(27.11442539915777454609).epsilon(1e-13));
}
