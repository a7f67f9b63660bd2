#pragma once

#include <array>
#include <cstdint>
#include <shared_mutex>
#include <string>
#include <vector>

#include "sgspec/decimation.hpp"

// The full double-cover spectrum as an ordered catalog. Eigenvalues arrange
// themselves in cycles C_1, C_2, ... of ten lines each; cycle C_k is driven
// by the factorization k = 2^j (2l - 1). Each line carries the Neumann and
// Dirichlet multiplicities for the gasket and their sum for the cover, so
// all three counting functions reduce to prefix sums over the catalog.

namespace sgspec {

std::int64_t pow3i(int e);
std::int64_t pow5i(int e);

struct CycleDecomposition {
  std::int64_t k = 0;
  std::int64_t ell = 0;
  int j = 0;
};

CycleDecomposition decompose(std::int64_t k);

struct SpectralLine {
  double value = 0.0;
  std::int64_t mult_neumann = 0;
  std::int64_t mult_dirichlet = 0;
  std::int64_t mult_tilde = 0;
  std::int64_t cycle = 0;  // 0 for the zero line
  int row = 0;             // 1..10 within a cycle, 0 for the zero line
  int family = 0;          // 2, 3 or 5; 0 for the zero line
  std::int64_t rank = 0;   // n of lambda^(family)_n
  int power = 0;           // extra factor 5^power on the primitive value

  std::string label() const;  // "zero", "lam(3,1)", "5^2*lam(3,1)", ...
};

struct CountingResult {
  double t = 0.0;
  std::int64_t n_neumann = 0;
  std::int64_t n_dirichlet = 0;
  std::int64_t n_tilde = 0;
  bool at_eigenvalue = false;  // t within tolerance of a catalog value
};

class SpectrumCatalog {
 public:
  // Values within rel_tol of t count as equal to t (inclusive counting).
  explicit SpectrumCatalog(double count_rel_tol = 1e-9);

  double count_rel_tol() const { return rel_tol_; }

  // The ten lines of cycle C_k in increasing order. Ordering is asserted,
  // not sorted: a violation means numeric trouble or a wrong row convention.
  std::array<SpectralLine, 10> cycle_rows(std::int64_t k);

  // Zero line followed by cycles C_1..C_K.
  std::vector<SpectralLine> spectrum(std::int64_t k_max);

  // Counting functions at t; extends the catalog lazily. Thread-safe
  // (shared-lock fast path, exclusive extension).
  CountingResult count(double t);

  // Counts evaluated exactly at the catalog line 5^power * lam(family, rank),
  // bypassing float comparisons when the value is an actual line; falls back
  // to count(value) when it is not part of the spectrum.
  CountingResult count_at_line(int family, std::int64_t rank, int power);

  // Cumulative n_tilde through the given row of C_k, as an exact integer.
  std::int64_t cover_count_through_row(std::int64_t k, int row);

  // Running n_neumann - n_dirichlet after each of the ten lines of C_k,
  // starting from the carried-in value 1.
  std::array<std::int64_t, 10> difference_profile(std::int64_t k);

  double primitive_value(int family, std::int64_t rank);

  std::int64_t cycles_generated() const;

 private:
  PrimitiveFamily& family_ref(int family);
  void ensure_cycles_locked(std::int64_t k);
  void ensure_value_coverage_locked(double t);
  void append_cycle_locked(std::int64_t k);
  CountingResult count_locked(double t) const;
  bool covered_locked(double t) const;

  mutable std::shared_mutex mu_;
  double rel_tol_;
  PrimitiveFamily fam2_{2}, fam3_{3}, fam5_{5};
  std::vector<SpectralLine> lines_;  // index 0 is the zero line
  std::vector<double> values_;
  std::vector<std::int64_t> cum_n_, cum_d_, cum_t_;
};

}  // namespace sgspec
