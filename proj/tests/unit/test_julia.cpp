#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sgspec/julia.hpp"

using namespace sgspec;

TEST_CASE("base gap and its children") {
  const Interval b1 = b_interval(1);
  CHECK(b1.lo == doctest::Approx((5.0 - std::sqrt(5.0)) / 2.0).epsilon(1e-15));
  CHECK(b1.hi == doctest::Approx((5.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-15));

  // Even child through phi_- (increasing), odd child through phi_+
  // (decreasing, so the endpoints swap).
  const Interval b2 = b_interval(2);
  CHECK(b2.lo == doctest::Approx(phi(Sign::minus, b1.lo)).epsilon(1e-14));
  CHECK(b2.hi == doctest::Approx(phi(Sign::minus, b1.hi)).epsilon(1e-14));
  const Interval b3 = b_interval(3);
  CHECK(b3.lo == doctest::Approx(phi(Sign::plus, b1.hi)).epsilon(1e-14));
  CHECK(b3.hi == doctest::Approx(phi(Sign::plus, b1.lo)).epsilon(1e-14));

  CHECK_THROWS_AS(b_interval(0), std::invalid_argument);
}

TEST_CASE("generation sums of gap lengths") {
  CHECK(b_total_length(1) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  const double g1 = b_interval(2).length() + b_interval(3).length();
  CHECK(b_total_length(2) == doctest::Approx(std::sqrt(5.0) + g1).epsilon(1e-14));
}

TEST_CASE("first cover level") {
  const auto cov = cover(1);
  REQUIRE(cov.size() == 2);
  CHECK(to_string(cov[0].word) == "-");
  CHECK(cov[0].lo == 0.0);
  CHECK(cov[0].hi == doctest::Approx(phi(Sign::minus, 5.0)).epsilon(1e-14));
  CHECK(to_string(cov[1].word) == "+");
  CHECK(cov[1].hi == 5.0);
  CHECK(cover_measure(1) == doctest::Approx(5.0 - std::sqrt(5.0)).epsilon(1e-14));
  CHECK(cover_measure(0) == 5.0);
}

TEST_CASE("measure shortcut equals the materialized cover") {
  for (int m : {2, 7, 10}) {
    double sum = 0.0;
    for (const auto& c : cover(m)) sum += c.length();
    CHECK(cover_measure(m) == doctest::Approx(sum).epsilon(1e-12));
  }
  CHECK_THROWS_AS(cover(21), std::invalid_argument);
}

TEST_CASE("cover plus gaps exhausts the interval") {
  const int m = 12;
  // Gaps of generation <= m-1 are exactly the complement of cover(m).
  const double total = cover_measure(m) + b_total_length(m);
  CHECK(total == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("classification against the gap tree") {
  auto r = classify(2.5, 1);
  CHECK(r.in_gap);
  CHECK(r.heap_index == 1);
  CHECK(r.generation == 0);
  CHECK(r.gap.lo == doctest::Approx(b_interval(1).lo));

  const Interval b2 = b_interval(2);
  r = classify(0.5 * (b2.lo + b2.hi), 5);
  CHECK(r.in_gap);
  CHECK(r.heap_index == 2);
  CHECK(r.generation == 1);

  // 4 = phi_+(4) is a fixed point of the iteration; it never leaves the cover.
  r = classify(4.0, 30);
  CHECK_FALSE(r.in_gap);
  CHECK(r.generation == 30);

  CHECK_THROWS_AS(classify(-1.0, 3), std::domain_error);
  CHECK_THROWS_AS(classify(2.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(classify(2.5, 41), std::invalid_argument);
}
