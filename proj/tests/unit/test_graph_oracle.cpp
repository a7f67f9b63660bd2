#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "sgspec/graph_oracle.hpp"

using namespace sgspec;

namespace {
std::vector<int> degree_list(const GraphApprox& g) {
  std::vector<int> deg(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    ++deg[e[0]];
    ++deg[e[1]];
  }
  return deg;
}
}  // namespace

TEST_CASE("graph shapes at the first two levels") {
  for (int level : {1, 2}) {
    const std::int64_t n3 = level == 1 ? 9 : 27;

    const auto dc = build_gamma(level, Space::DoubleCover);
    CHECK(std::ssize(dc.vertices) == n3);
    CHECK(std::ssize(dc.edges) == 2 * n3);
    CHECK(dc.boundary.empty());
    for (int d : degree_list(dc)) CHECK(d == 4);

    const auto sg = build_gamma(level, Space::SG);
    CHECK(std::ssize(sg.vertices) == (n3 + 3) / 2);
    CHECK(std::ssize(sg.edges) == n3);
    REQUIRE(sg.boundary.size() == 3);
    const auto deg = degree_list(sg);
    for (int b : sg.boundary) CHECK(deg[b] == 2);
  }
  CHECK_THROWS_AS(build_gamma(0, Space::SG), std::invalid_argument);
  CHECK_THROWS_AS(build_gamma(7, Space::SG), std::invalid_argument);
}

TEST_CASE("first double-cover spectrum") {
  const auto spec = graph_spectrum(build_gamma(1, Space::DoubleCover), Bc::Free);
  REQUIRE(spec.groups.size() == 5);
  const double values[] = {0.0, 2.0, 3.0, 5.0, 6.0};
  const int mults[] = {1, 1, 2, 2, 3};
  for (int i = 0; i < 5; ++i) {
    CHECK(spec.groups[i].value == doctest::Approx(values[i]).epsilon(1e-9));
    CHECK(spec.groups[i].multiplicity == mults[i]);
  }
  CHECK(spec.max_residual < 1e-10);
}

TEST_CASE("gasket boundary conditions") {
  const auto sg1 = build_gamma(1, Space::SG);

  const auto dir = graph_spectrum(sg1, Bc::Dirichlet);
  REQUIRE(dir.groups.size() == 2);
  CHECK(dir.groups[0].value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(dir.groups[0].multiplicity == 1);
  CHECK(dir.groups[1].value == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(dir.groups[1].multiplicity == 2);

  const auto neu = graph_spectrum(sg1, Bc::Neumann);
  CHECK(neu.raw.size() == 6);
  CHECK(neu.raw.front() == doctest::Approx(0.0).epsilon(1e-10));

  CHECK_THROWS_AS(graph_spectrum(build_gamma(1, Space::DoubleCover), Bc::Dirichlet),
                  std::invalid_argument);
}

TEST_CASE("decimation closure across levels") {
  const auto rep = decimation_closure_report(3);
  CHECK(rep.pass);
  REQUIRE(rep.levels.size() == 3);
  for (const auto& lvl : rep.levels) {
    CHECK(lvl.violations == 0);
    CHECK(lvl.counts_sum_ok);
    CHECK(lvl.nd_diff_min >= 0);
    CHECK(lvl.nd_diff_max <= 3);
  }
  CHECK(rep.levels[0].free_count == 9);
  CHECK(rep.levels[2].free_count == 81);
  CHECK_FALSE(rep.levels[1].lines.empty());
  CHECK_THROWS_AS(decimation_closure_report(0), std::invalid_argument);
}

TEST_CASE("continuation of an eigenvalue chain") {
  // 3(5-3) = 6, so (6 at level 1, 3 at level 2) is a valid orbit; its limit
  // is 5^2 psi(3).
  CHECK(fractal_limit_estimate(1, {6.0, 3.0}) ==
        doctest::Approx(135.5721269957888727).epsilon(1e-12));
  CHECK_THROWS_AS(fractal_limit_estimate(1, {6.0, 4.0}), std::invalid_argument);
  CHECK_THROWS_AS(fractal_limit_estimate(1, {}), std::invalid_argument);
}

TEST_CASE("space and condition names") {
  CHECK(std::string(to_string(Space::SG)) == "sg");
  CHECK(std::string(to_string(Space::DoubleCover)) == "double-cover");
  CHECK(std::string(to_string(Bc::Neumann)) == "neumann");
}
