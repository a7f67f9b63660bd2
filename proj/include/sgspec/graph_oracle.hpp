#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

// Brute-force cross-check: level-m graph approximations of the gasket and of
// its double cover (two copies glued at the three corners), dense graph-
// Laplacian spectra, decimation closure mu -> mu(5 - mu), and continuation
// of graph eigenvalues to fractal eigenvalues through psi.

namespace sgspec {

enum class Space { SG, DoubleCover };
enum class Bc { Free, Neumann, Dirichlet };

const char* to_string(Space s);
const char* to_string(Bc c);

struct GraphApprox {
  int level = 0;
  Space space = Space::SG;
  // (x, y, sheet) on the lattice scaled to 2^level; sheet is 0 or 1.
  std::vector<std::array<std::int64_t, 3>> vertices;
  std::vector<std::array<int, 2>> edges;
  std::vector<int> boundary;  // corner ids; empty for the double cover
};

// Level-m approximation, 1 <= m <= 6. The double cover has 3^{m+1} vertices
// and is 4-regular; the gasket has (3^{m+1}+3)/2 vertices with three
// degree-2 corners.
GraphApprox build_gamma(int level, Space space);

struct EigenvalueGroup {
  double value = 0.0;  // group mean
  int multiplicity = 0;
};

struct GraphSpectrum {
  int level = 0;
  Space space = Space::SG;
  Bc condition = Bc::Free;
  std::vector<double> raw;              // ascending, one entry per dimension
  std::vector<EigenvalueGroup> groups;  // grouped at 1e-8 absolute
  double max_residual = 0.0;            // ||L v - mu v|| over sampled pairs
};

// Dense symmetric eigensolve of the positive Laplacian (degree minus
// adjacency), eigenvalues in [0, 6]. Dirichlet deletes the boundary
// rows/columns and requires a space with a boundary.
GraphSpectrum graph_spectrum(const GraphApprox& g, Bc condition);

struct ClosureLine {
  double value = 0.0;
  int multiplicity = 0;
  double image = 0.0;   // mu (5 - mu)
  std::string status;   // "zero", "branch-point", "decimates", "violation"
};

struct ClosureLevelReport {
  int level = 0;
  std::vector<ClosureLine> lines;  // double-cover groups (levels >= 2)
  int violations = 0;
  std::int64_t free_count = 0;      // 3^{m+1}, checked against the solve
  std::int64_t neumann_count = 0;   // gasket spectrum size
  std::int64_t dirichlet_count = 0;
  bool counts_sum_ok = false;       // neumann + dirichlet == free
  // Sorted free spectrum vs sorted union of Neumann and Dirichlet spectra:
  // max pointwise gap. Reported, not asserted: the fractal identity
  // N~ = N_N + N_D does not hold multiset-exactly at graph level (the even
  // extension of a plain-Laplacian Neumann eigenfunction fails the glued
  // eigenvalue equation at the corners, where the cover doubles the row).
  double split_multiset_defect = 0.0;
  std::int64_t nd_diff_min = 0;  // range of count_N - count_D over thresholds
  std::int64_t nd_diff_max = 0;
  double max_residual = 0.0;
};

struct ClosureReport {
  std::vector<ClosureLevelReport> levels;  // 1..m_max
  bool pass = false;                       // no closure violations anywhere
};

// Eigensolves the double cover and the gasket at levels 1..m_max (m_max <= 5
// is the tested range) and checks that every nonzero cover eigenvalue either
// is a branch value {2, 5, 6} (1e-8) or maps into the previous level under
// mu -> mu(5 - mu) (1e-7).
ClosureReport decimation_closure_report(int m_max);

// Continues a per-level eigenvalue sequence (mu at first_level, first_level+1,
// ...) to its fractal eigenvalue 5^{last_level} psi(mu_last), after checking
// each step satisfies mu_next (5 - mu_next) = mu_prev within 1e-6. Throws
// std::invalid_argument when the sequence is not decimation-consistent.
double fractal_limit_estimate(int first_level, const std::vector<double>& mu);

}  // namespace sgspec
