#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sgspec/decimation.hpp"

using namespace sgspec;

namespace {
// Reference values computed with 50-digit arithmetic (tests/oracle/psi_reference.py).
constexpr double kPsi2 = 3.363199777869680794839;
constexpr double kPsi3 = 5.422885079831554909218;
constexpr double kPsi5 = 11.17716549083892109456;
constexpr double kPhiMinus5 = 1.381966011250105151795;
constexpr double kPhiPlusMinus5 = 4.706362161738161890245;
}  // namespace

TEST_CASE("phi branches at reference points") {
  CHECK(phi(Sign::minus, 5.0) == doctest::Approx(kPhiMinus5).epsilon(1e-15));
  CHECK(phi(Sign::plus, phi(Sign::minus, 5.0)) ==
        doctest::Approx(kPhiPlusMinus5).epsilon(1e-15));
  CHECK(phi(Sign::minus, 0.0) == 0.0);
  CHECK(phi(Sign::plus, 0.0) == 5.0);
  CHECK(phi(Sign::minus, kPhiDomainMax) == doctest::Approx(2.5));
  CHECK(phi(Sign::plus, kPhiDomainMax) == doctest::Approx(2.5));
  CHECK_THROWS_AS(phi(Sign::plus, 6.5), std::domain_error);
}

TEST_CASE("minus branch avoids cancellation for tiny inputs") {
  // phi_-(t) ~ t/5 near zero; the naive (5 - sqrt(25-4t))/2 form loses
  // every significant digit here.
  const double t = 1e-300;
  CHECK(phi(Sign::minus, t) * 5.0 / t == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("phi_word composes outermost-first") {
  const SignWord w = word_from_string("+-");
  CHECK(phi_word(w, 3.0) == doctest::Approx(phi(Sign::plus, phi(Sign::minus, 3.0))));
  CHECK(phi_word({}, 3.0) == 3.0);
}

TEST_CASE("sign words round-trip through strings") {
  CHECK(to_string(word_from_string("+-+")) == "+-+");
  CHECK(to_string(word_from_string("")) == "");
  CHECK_THROWS_AS(word_from_string("+x-"), std::invalid_argument);
}

TEST_CASE("psi reference values") {
  CHECK(psi(0.0) == 0.0);
  CHECK(psi(2.0) == doctest::Approx(kPsi2).epsilon(1e-13));
  CHECK(psi(3.0) == doctest::Approx(kPsi3).epsilon(1e-13));
  CHECK(psi(5.0) == doctest::Approx(kPsi5).epsilon(1e-13));
}

TEST_CASE("psi renormalization identity at an interior point") {
  const double x = 4.2;
  CHECK(5.0 * psi(phi(Sign::minus, x)) == doctest::Approx(psi(x)).epsilon(1e-13));
}

TEST_CASE("power-of-five helpers are exact") {
  CHECK(pow5d(0) == 1.0);
  CHECK(pow5d(3) == 125.0);
  CHECK(pow5d(-2) == 1.0 / 25.0);
  CHECK(scale_by_pow5(3.0, 2) == 75.0);
  CHECK(scale_by_pow5(75.0, -2) == 3.0);
}

TEST_CASE("level_of_rank follows the block sizes") {
  // Blocks have sizes 1, 1, 2, 4, 8, ... so the level is bit_width(n-1)
  // for n >= 2.
  CHECK(PrimitiveFamily::level_of_rank(1) == 0);
  CHECK(PrimitiveFamily::level_of_rank(2) == 1);
  CHECK(PrimitiveFamily::level_of_rank(3) == 2);
  CHECK(PrimitiveFamily::level_of_rank(4) == 2);
  CHECK(PrimitiveFamily::level_of_rank(5) == 3);
  CHECK(PrimitiveFamily::level_of_rank(8) == 3);
  CHECK(PrimitiveFamily::level_of_rank(9) == 4);
}

TEST_CASE("primitive families start at five psi of the generator") {
  CHECK(primitive_list(2, 1)[0].value == doctest::Approx(5.0 * kPsi2).epsilon(1e-13));
  CHECK(primitive_list(3, 1)[0].value == doctest::Approx(5.0 * kPsi3).epsilon(1e-13));
  CHECK(primitive_list(5, 1)[0].value == doctest::Approx(5.0 * kPsi5).epsilon(1e-13));
}

TEST_CASE("primitive lists are strictly increasing with consistent words") {
  const auto list = primitive_list(3, 8);
  REQUIRE(list.size() == 8);
  for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1].value < list[i].value);
  CHECK(list[0].level == 0);
  CHECK(to_string(list[0].word()).empty());
  CHECK(list[1].level == 1);
  CHECK(to_string(list[1].word()) == "+");
  // Rank 2 is the single level-1 word '+': 5^2 psi(phi_+(3)).
  CHECK(list[1].value == doctest::Approx(25.0 * psi(phi(Sign::plus, 3.0))).epsilon(1e-13));
  // Every value reproduces from its own word.
  for (const auto& e : list) {
    CHECK(e.value ==
          doctest::Approx(pow5d(e.level + 1) * psi(phi_word(e.word(), 3.0))).epsilon(1e-13));
  }
}

TEST_CASE("family rejects bad generators and ranks") {
  CHECK_THROWS_AS(PrimitiveFamily(4), std::invalid_argument);
  PrimitiveFamily f(3);
  CHECK_THROWS_AS(f.value(0), std::invalid_argument);
}
