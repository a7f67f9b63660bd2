#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "sgspec/catalog.hpp"

// Exact Weyl structure: the counting function of the double cover satisfies
// N~(t) = 2 G(t) t^alpha exactly (no remainder) on an open set A of full
// measure, where alpha = log3/log5 and G is multiplicatively periodic,
// G(5t) = G(t). A is the union over scales 5^n of the base gaps
//   A_l  = (5 lam(5, 2l-1), 5^2 lam(3, l)),
//   A'_l = (5^2 lam(3, l),  5 lam(5, 2l)),
// i.e. the two eigenvalue-free intervals flanking 5^2 lam(3, l). On each
// component N~ is a constant integer, which makes every identity checkable
// in exact integer arithmetic.

namespace sgspec {

inline const double kAlpha = std::log(3.0) / std::log(5.0);

enum class IntervalKind { A, APrime };

const char* to_string(IntervalKind k);  // "A" or "A'"

struct WeylInterval {
  IntervalKind kind = IntervalKind::A;
  std::int64_t ell = 0;
  int scale_n = 0;
  double lo = 0.0, hi = 0.0;         // open endpoints, already scaled by 5^n
  std::int64_t g_coefficient = 0;    // integer value of N~ on the base interval
  double g1_value = 0.0;             // 0 on A, 3/2 on A'
  int m0 = 0;                        // max(-scale_n, 0)
};

// The two base (scale 0) intervals at l; asserts nonemptiness and that the
// cover count is constant across interior probes at 1/4, 1/2, 3/4.
std::pair<WeylInterval, WeylInterval> base_intervals(std::int64_t ell,
                                                     SpectrumCatalog& cat);

struct LocateResult {
  bool located = false;
  IntervalKind kind = IntervalKind::A;
  std::int64_t ell = 0;
  int scale_n = 0;
  double t = 0.0;
  double t_hat = 0.0;  // t / 5^n, inside the base interval when located
};

// Membership in A up to ell_max. Scans candidate scales n (largest first)
// and bisects the base intervals, which are increasing in l. Components of
// A are pairwise disjoint, so a located point has a unique description.
LocateResult locate(double t, SpectrumCatalog& cat, std::int64_t ell_max = 1024);

// The full interval data for a located point.
WeylInterval interval_at(const LocateResult& loc, SpectrumCatalog& cat);

struct GValues {
  double G = 0.0;   // (g/2) * t_hat^{-alpha}; multiplicatively periodic
  double g1 = 0.0;  // 0 or 3/2
  WeylInterval interval;
};

// Throws std::domain_error when t is not located (outside A at this depth).
GValues weyl_G(double t, SpectrumCatalog& cat, std::int64_t ell_max = 1024);

struct TheoremCheckLine {
  int m = 0;
  std::int64_t lhs_tilde = 0;      // N~(5^m t) from the catalog
  std::int64_t rhs_tilde = 0;      // 3^{m+n} * g_coefficient
  std::int64_t n_neumann = 0;
  std::int64_t n_dirichlet = 0;
  bool pass = false;
};

struct TheoremReport {
  LocateResult where;
  WeylInterval interval;
  std::vector<TheoremCheckLine> checks;  // m = m0 .. m_max
  bool pass = false;
};

// Exact integer verification at t: for every m in [m0, m_max],
//   N~(5^m t) == 3^{m+n} g,
//   2 N_N(5^m t) == 3^{m+n} g + 2 g1,   2 N_D(5^m t) == 3^{m+n} g - 2 g1,
// with all quantities integers (2 g1 is 0 or 3).
TheoremReport verify_theorem(double t, int m_max, SpectrumCatalog& cat,
                             std::int64_t ell_max = 1024);

struct WeylSample {
  double t = 0.0;
  double ratio_tilde = 0.0;     // N~(t) / t^alpha
  double ratio_neumann = 0.0;   // N_N(t) / t^alpha
  double ratio_dirichlet = 0.0; // N_D(t) / t^alpha
  bool located = false;
  IntervalKind kind = IntervalKind::A;
  std::int64_t ell = 0;
  int scale_n = 0;
  double G = 0.0;   // NaN when not located
  double g1 = 0.0;  // NaN when not located
};

// Logarithmically spaced samples over [t_lo, t_hi] for plotting.
std::vector<WeylSample> weyl_ratio_scan(double t_lo, double t_hi, int samples,
                                        SpectrumCatalog& cat,
                                        std::int64_t ell_max = 1024);

}  // namespace sgspec
