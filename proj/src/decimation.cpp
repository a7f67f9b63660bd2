#include "sgspec/decimation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sgspec {

namespace {

[[noreturn]] void fail(const char* fmt, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  throw std::domain_error(buf);
}

}  // namespace

std::string to_string(const SignWord& w) {
  std::string s;
  s.reserve(w.size());
  for (Sign x : w) s.push_back(x == Sign::plus ? '+' : '-');
  return s;
}

SignWord word_from_string(std::string_view s) {
  SignWord w;
  w.reserve(s.size());
  for (char c : s) {
    if (c == '+')
      w.push_back(Sign::plus);
    else if (c == '-')
      w.push_back(Sign::minus);
    else
      throw std::invalid_argument("sign word: expected only '+' and '-'");
  }
  return w;
}

double phi(Sign s, double t) {
  if (!(t <= kPhiDomainMax)) fail("phi: t = %.17g above 25/4", t);
  const double root = std::sqrt(25.0 - 4.0 * t);
  if (s == Sign::plus) return (5.0 + root) / 2.0;
  return 2.0 * t / (5.0 + root);
}

double phi_word(const SignWord& w, double t) {
  double x = t;
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = phi(*it, x);
  return x;
}

double psi(double t, const PsiOptions& opt) {
  if (!(t <= kPhiDomainMax)) fail("psi: t = %.17g above 25/4", t);
  double x = t;
  double scale = 1.5;
  double prev = scale * x;
  for (int k = 0; k < opt.max_iter; ++k) {
    x = 2.0 * x / (5.0 + std::sqrt(25.0 - 4.0 * x));
    scale *= 5.0;
    const double cur = scale * x;
    if (std::abs(cur - prev) <= opt.rel_tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw std::runtime_error("psi: renormalized iteration did not converge");
}

double pow5d(int e) {
  double r = 1.0;
  const int a = e < 0 ? -e : e;
  for (int i = 0; i < a; ++i) r *= 5.0;
  return e < 0 ? 1.0 / r : r;
}

double scale_by_pow5(double t, int n) {
  if (n >= 0) return t * pow5d(n);
  return t / pow5d(-n);
}

SignWord PrimitiveEigenvalue::word() const {
  SignWord w;
  if (level == 0) return w;
  w.reserve(level);
  w.push_back(Sign::plus);
  for (int i = 2; i <= level; ++i)
    w.push_back((suffix_bits >> (i - 2)) & 1u ? Sign::plus : Sign::minus);
  return w;
}

PrimitiveFamily::PrimitiveFamily(int p) : p_(p) {
  if (p != 2 && p != 3 && p != 5)
    throw std::invalid_argument("primitive family generator must be 2, 3 or 5");
}

int PrimitiveFamily::level_of_rank(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("primitive rank must be >= 1");
  if (n == 1) return 0;
  return std::bit_width(static_cast<std::uint64_t>(n - 1));
}

std::pair<double, double> PrimitiveFamily::level_band(int m) {
  // Level 0 holds the single seed value 5 psi(p), p in {2, 3, 5}. Deeper
  // words start with phi_+, whose range is (phi_+(5), 5), so their psi
  // values land in (psi(phi_+(5)), psi(5)) regardless of p. Successive
  // bands stay disjoint because psi(phi_+(5)) > psi(5) / 5.
  static const double psi2 = psi(2.0);
  static const double psi5 = psi(5.0);
  static const double psi_plus5 = psi(phi(Sign::plus, 5.0));
  if (m == 0) return {5.0 * psi2, 5.0 * psi5 * (1.0 + 1e-12)};
  const double s = pow5d(m + 1);
  return {psi_plus5 * s, psi5 * s};
}

double PrimitiveFamily::value(std::int64_t n) {
  extend_to_rank(n);
  return entries_[static_cast<std::size_t>(n - 1)].value;
}

const PrimitiveEigenvalue& PrimitiveFamily::entry(std::int64_t n) {
  extend_to_rank(n);
  return entries_[static_cast<std::size_t>(n - 1)];
}

void PrimitiveFamily::extend_to_rank(std::int64_t n) { extend_to_level(level_of_rank(n)); }

void PrimitiveFamily::extend_to_level(int m) {
  if (m > 32) throw std::invalid_argument("primitive family level cap (32) exceeded");
  while (level_ < m) append_next_level();
}

void PrimitiveFamily::append_next_level() {
  if (level_ < 0) {
    entries_.push_back({5.0 * psi(static_cast<double>(p_)), 0, 0});
    frontier_.assign(1, static_cast<double>(p_));
    frontier_bits_.assign(1, 0u);
    level_ = 0;
    return;
  }

  const int m = level_ + 1;
  const double scale = pow5d(m + 1);
  std::vector<PrimitiveEigenvalue> block;
  block.reserve(frontier_.size());
  for (std::size_t i = 0; i < frontier_.size(); ++i)
    block.push_back({scale * psi(phi(Sign::plus, frontier_[i])), m, frontier_bits_[i]});

  std::sort(block.begin(), block.end(),
            [](const PrimitiveEigenvalue& a, const PrimitiveEigenvalue& b) {
              return a.value < b.value;
            });
  for (std::size_t i = 1; i < block.size(); ++i) {
    const double gap = block[i].value - block[i - 1].value;
    if (gap <= 1e-12 * block[i].value) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "primitive family: near-tie %.17g vs %.17g signals precision loss",
                    block[i - 1].value, block[i].value);
      throw std::runtime_error(buf);
    }
  }
  entries_.insert(entries_.end(), block.begin(), block.end());

  // Grow the inner suffixes: each s becomes (-,s) and (+,s); the new sign is
  // the next-to-outermost position d2, so previous bits shift up by one.
  std::vector<double> nf(frontier_.size() * 2);
  std::vector<std::uint32_t> nb(frontier_.size() * 2);
  for (std::size_t i = 0; i < frontier_.size(); ++i) {
    nf[2 * i] = phi(Sign::minus, frontier_[i]);
    nb[2 * i] = frontier_bits_[i] << 1;
    nf[2 * i + 1] = phi(Sign::plus, frontier_[i]);
    nb[2 * i + 1] = (frontier_bits_[i] << 1) | 1u;
  }
  frontier_ = std::move(nf);
  frontier_bits_ = std::move(nb);
  level_ = m;
}

std::vector<PrimitiveEigenvalue> primitive_list(int p, std::int64_t count) {
  if (count < 1) throw std::invalid_argument("primitive_list: count must be >= 1");
  PrimitiveFamily fam(p);
  fam.extend_to_rank(count);
  std::vector<PrimitiveEigenvalue> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t n = 1; n <= count; ++n) out.push_back(fam.entry(n));
  return out;
}

}  // namespace sgspec
