#include "sgspec/julia.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace sgspec {

namespace {

Interval apply_branch(Sign s, Interval v) {
  const double a = phi(s, v.lo);
  const double b = phi(s, v.hi);
  return a <= b ? Interval{a, b} : Interval{b, a};
}

Interval base_gap() {
  const double r = std::sqrt(5.0);
  return {(5.0 - r) / 2.0, (5.0 + r) / 2.0};
}

void check_depth(int m) {
  if (m < 0 || m > kCoverDepthCap)
    throw std::invalid_argument("cover depth outside [0, 40]");
}

void cover_dfs(Interval v, int remaining, std::vector<Sign>& path,
               std::vector<CoverInterval>& out) {
  if (remaining == 0) {
    CoverInterval c;
    // The path applies branches inside-out, so the word is the reversed path.
    c.word.assign(path.rbegin(), path.rend());
    c.lo = v.lo;
    c.hi = v.hi;
    out.push_back(c);
    return;
  }
  for (Sign s : {Sign::minus, Sign::plus}) {
    path.push_back(s);
    cover_dfs(apply_branch(s, v), remaining - 1, path, out);
    path.pop_back();
  }
}

// Sum over all words w of length `depth` of |phi_-(phi_w([a, b]))|. Seeded
// with [0, 5] this is the total length of the next cover level's intervals
// whose outermost letter is '-'; the reflection phi_+(x) = 5 - phi_-(x)
// makes the '+' half the same total. The hot loops run on flat per-level
// arrays near the bottom so the sqrt-heavy expansion vectorizes; endpoints
// are tracked unnormalized since only |b - a| matters for the total.
constexpr int kFlatDepth = 17;

double flat_minus_half_sum(double a0, double b0, int depth) {
  static thread_local std::vector<double> bufs[4];
  const std::size_t n_leaves = std::size_t{1} << depth;
  for (auto& b : bufs) b.resize(n_leaves);
  double *a = bufs[0].data(), *b = bufs[1].data();
  double *na = bufs[2].data(), *nb = bufs[3].data();
  a[0] = a0;
  b[0] = b0;
  std::size_t n = 1;
  for (int d = 0; d < depth; ++d) {
    for (std::size_t i = 0; i < n; ++i) {
      const double sa = std::sqrt(25.0 - 4.0 * a[i]);
      na[i] = 2.0 * a[i] / (5.0 + sa);
      na[n + i] = (5.0 + sa) / 2.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double sb = std::sqrt(25.0 - 4.0 * b[i]);
      nb[i] = 2.0 * b[i] / (5.0 + sb);
      nb[n + i] = (5.0 + sb) / 2.0;
    }
    std::swap(a, na);
    std::swap(b, nb);
    n *= 2;
  }
  long double total = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const double la = 2.0 * a[i] / (5.0 + std::sqrt(25.0 - 4.0 * a[i]));
    const double lb = 2.0 * b[i] / (5.0 + std::sqrt(25.0 - 4.0 * b[i]));
    total += std::abs(lb - la);
  }
  return static_cast<double>(total);
}

double minus_half_sum(double a, double b, int depth) {
  if (depth <= kFlatDepth) return flat_minus_half_sum(a, b, depth);
  const double sa = std::sqrt(25.0 - 4.0 * a);
  const double sb = std::sqrt(25.0 - 4.0 * b);
  return minus_half_sum(2.0 * a / (5.0 + sa), 2.0 * b / (5.0 + sb), depth - 1) +
         minus_half_sum((5.0 + sa) / 2.0, (5.0 + sb) / 2.0, depth - 1);
}

double gap_lengths_dfs(Interval v, int remaining) {
  double sum = v.length();
  if (remaining == 0) return sum;
  sum += gap_lengths_dfs(apply_branch(Sign::minus, v), remaining - 1);
  sum += gap_lengths_dfs(apply_branch(Sign::plus, v), remaining - 1);
  return sum;
}

}  // namespace

Interval b_interval(std::uint64_t heap_index) {
  if (heap_index == 0) throw std::invalid_argument("heap index must be >= 1");
  const int depth = std::bit_width(heap_index) - 1;
  if (depth > kCoverDepthCap) throw std::invalid_argument("gap tree depth cap exceeded");
  Interval v = base_gap();
  for (int i = depth - 1; i >= 0; --i)
    v = apply_branch((heap_index >> i) & 1u ? Sign::plus : Sign::minus, v);
  return v;
}

double b_total_length(int depth) {
  check_depth(depth);
  if (depth == 0) return 0.0;
  return gap_lengths_dfs(base_gap(), depth - 1);
}

std::vector<CoverInterval> cover(int m) {
  check_depth(m);
  if (m > 20) throw std::invalid_argument("cover: materialization capped at depth 20");
  std::vector<CoverInterval> out;
  out.reserve(std::size_t{1} << m);
  std::vector<Sign> path;
  cover_dfs({0.0, 5.0}, m, path, out);
  std::sort(out.begin(), out.end(),
            [](const CoverInterval& x, const CoverInterval& y) { return x.lo < y.lo; });
  return out;
}

double cover_measure(int m) {
  check_depth(m);
  if (m == 0) return 5.0;
  return 2.0 * minus_half_sum(0.0, 5.0, m - 1);
}

ClassifyResult classify(double t, int depth) {
  if (!(t >= 0.0 && t <= 5.0)) throw std::domain_error("classify: t outside [0, 5]");
  if (depth < 1 || depth > kCoverDepthCap)
    throw std::invalid_argument("classify depth outside [1, 40]");

  const Interval b1 = base_gap();
  double x = t;
  std::uint64_t bits = 0;
  for (int d = 0; d < depth; ++d) {
    if (x > b1.lo && x < b1.hi) {
      ClassifyResult r;
      r.in_gap = true;
      r.generation = d;
      r.heap_index = (std::uint64_t{1} << d) | bits;
      r.gap = b_interval(r.heap_index);
      return r;
    }
    if (x > 2.5) bits |= std::uint64_t{1} << d;
    x = x * (5.0 - x);
  }
  ClassifyResult r;
  r.generation = depth;
  return r;
}

}  // namespace sgspec
