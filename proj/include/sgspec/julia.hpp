#pragma once

#include <cstdint>
#include <vector>

#include "sgspec/decimation.hpp"

// Structure of the exceptional set J inside [0, 5]: J is the Julia set of
// z -> z(5-z), covered at depth m by the 2^m intervals phi_delta([0,5]) over
// words of length m (first sign unrestricted here). The complement of the
// cover is exhausted by the gap intervals B_l, generated as a binary tree:
// B_1 = ((5-sqrt5)/2, (5+sqrt5)/2), B_2l = phi_-(B_l), B_2l+1 = phi_+(B_l).
// Both branches contract by at least 1/sqrt5 on [0,5], so the cover measure
// decays geometrically and J has measure zero.

namespace sgspec {

inline constexpr int kCoverDepthCap = 40;

struct Interval {
  double lo = 0.0, hi = 0.0;
  double length() const { return hi - lo; }
};

// Gap interval in heap order: heap_index 1 is B_1; even child applies
// phi_-, odd child applies phi_+ (normalizing endpoint order, since phi_+
// reverses orientation).
Interval b_interval(std::uint64_t heap_index);

// Sum of |B_l| over all heap indices below 2^depth (generations 0..depth-1).
double b_total_length(int depth);

struct CoverInterval {
  SignWord word;
  double lo = 0.0, hi = 0.0;
  double length() const { return hi - lo; }
};

// All 2^m cover intervals phi_delta([0,5]) with |delta| = m, sorted by
// position. Materializes the list; use cover_measure for large m.
std::vector<CoverInterval> cover(int m);

// Total length of cover(m) without materializing it. The cover is symmetric
// under x -> 5 - x, which pairs the intervals whose outermost branch letter
// is '-' with those starting '+'; only the '-' half is summed.
double cover_measure(int m);

struct ClassifyResult {
  bool in_gap = false;          // strictly inside some B at generation < depth
  std::uint64_t heap_index = 0; // which B, when in_gap
  int generation = 0;           // tree depth of that B; equals `depth` otherwise
  Interval gap{};               // the containing B interval, when in_gap
};

// Forward-iterates z -> z(5-z) to decide whether t falls into a gap interval
// within `depth` generations or stays in the residual cover. Reliable while
// the expansion factor 5^generation times double roundoff stays below the
// distance of t to the nearest gap endpoint.
ClassifyResult classify(double t, int depth);

}  // namespace sgspec
