#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sgspec/weyl.hpp"

using namespace sgspec;

TEST_CASE("alpha is log3 over log5") {
  CHECK(kAlpha == doctest::Approx(std::log(3.0) / std::log(5.0)).epsilon(1e-15));
}

TEST_CASE("first base intervals") {
  SpectrumCatalog cat;
  const auto [a, ap] = base_intervals(1, cat);

  CHECK(a.kind == IntervalKind::A);
  CHECK(a.lo == doctest::Approx(279.4291372709730273639).epsilon(1e-13));
  CHECK(a.hi == doctest::Approx(677.8606349789443636523).epsilon(1e-13));
  CHECK(a.g_coefficient == 18);
  CHECK(a.g1_value == 0.0);
  CHECK(a.m0 == 0);

  CHECK(ap.kind == IntervalKind::APrime);
  CHECK(ap.lo == a.hi);  // the two gaps share the ninth-row endpoint exactly
  CHECK(ap.hi == doctest::Approx(861.8226027673245099022).epsilon(1e-13));
  CHECK(ap.g_coefficient == 27);
  CHECK(ap.g1_value == 1.5);

  CHECK_THROWS_AS(base_intervals(0, cat), std::invalid_argument);
}

TEST_CASE("locating points across scales") {
  SpectrumCatalog cat;
  const auto [a, ap] = base_intervals(1, cat);
  const double mid = 0.5 * (ap.lo + ap.hi);

  auto loc = locate(mid, cat);
  CHECK(loc.located);
  CHECK(loc.kind == IntervalKind::APrime);
  CHECK(loc.ell == 1);
  CHECK(loc.scale_n == 0);
  CHECK(loc.t_hat == doctest::Approx(mid));

  loc = locate(mid * 25.0, cat);
  CHECK(loc.located);
  CHECK(loc.scale_n == 2);
  CHECK(loc.ell == 1);

  loc = locate(mid / 25.0, cat);
  CHECK(loc.located);
  CHECK(loc.scale_n == -2);

  // An eigenvalue sits on the (open) shared endpoint of its scaled gap pair.
  loc = locate(cat.primitive_value(3, 1), cat);
  CHECK_FALSE(loc.located);

  CHECK_THROWS_AS(locate(0.0, cat), std::invalid_argument);
}

TEST_CASE("G values on located points") {
  SpectrumCatalog cat;
  const auto [a, ap] = base_intervals(1, cat);
  const double mid = 0.5 * (ap.lo + ap.hi);

  const auto gv = weyl_G(mid, cat);
  CHECK(gv.g1 == 1.5);
  CHECK(gv.G == doctest::Approx(13.5 * std::pow(mid, -kAlpha)).epsilon(1e-12));

  // Multiplicative periodicity: G(5t) = G(t).
  CHECK(weyl_G(5.0 * mid, cat).G == doctest::Approx(gv.G).epsilon(1e-12));

  CHECK_THROWS_AS(weyl_G(cat.primitive_value(3, 1), cat), std::domain_error);
}

TEST_CASE("exact counting identity along renormalizations") {
  SpectrumCatalog cat;
  const auto [a, ap] = base_intervals(1, cat);
  const double mid = 0.5 * (ap.lo + ap.hi);

  const auto rep = verify_theorem(mid, 4, cat);
  CHECK(rep.pass);
  REQUIRE(rep.checks.size() == 5);
  const std::int64_t want[] = {27, 81, 243, 729, 2187};
  for (int m = 0; m <= 4; ++m) {
    CHECK(rep.checks[m].m == m);
    CHECK(rep.checks[m].lhs_tilde == want[m]);
    CHECK(rep.checks[m].rhs_tilde == want[m]);
    CHECK(rep.checks[m].pass);
  }
}

TEST_CASE("negative scales delay the identity until m0") {
  SpectrumCatalog cat;
  const auto [a, ap] = base_intervals(1, cat);
  const double t = 0.5 * (ap.lo + ap.hi) / 25.0;

  const auto rep = verify_theorem(t, 4, cat);
  CHECK(rep.pass);
  CHECK(rep.where.scale_n == -2);
  CHECK(rep.interval.m0 == 2);
  REQUIRE(!rep.checks.empty());
  CHECK(rep.checks.front().m == 2);  // checks start at m0
  CHECK(rep.checks.front().lhs_tilde == 27);
}

TEST_CASE("ratio scan output shape") {
  SpectrumCatalog cat;
  const auto samples = weyl_ratio_scan(25.0, 3125.0, 50, cat);
  REQUIRE(samples.size() == 50);
  CHECK(samples.front().t == doctest::Approx(25.0));
  CHECK(samples.back().t == doctest::Approx(3125.0));
  for (std::size_t i = 1; i < samples.size(); ++i) CHECK(samples[i - 1].t < samples[i].t);
  for (const auto& s : samples) {
    CHECK(s.ratio_tilde > 0.0);
    if (!s.located) {
      CHECK(std::isnan(s.G));
      CHECK(std::isnan(s.g1));
    } else if (s.scale_n >= 0) {
      // On located points at nonnegative scale the count is exactly 2 G t^alpha.
      CHECK(s.ratio_tilde == doctest::Approx(2.0 * s.G).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(weyl_ratio_scan(10.0, 5.0, 10, cat), std::invalid_argument);
}
