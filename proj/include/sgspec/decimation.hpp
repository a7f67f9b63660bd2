#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Spectral decimation primitives for the Sierpinski gasket Laplacian.
//
// The renormalization map is z -> z(5 - z); its inverse branches are
//   phi_+(t) = (5 + sqrt(25 - 4t)) / 2,   phi_-(t) = (5 - sqrt(25 - 4t)) / 2,
// and the renormalized limit psi(t) = (3/2) * lim_k 5^k phi_-^(k)(t) turns a
// decimation orbit into a fractal eigenvalue. Eigenvalues come in three
// families lambda^(p)_n (p = 2, 3, 5), generated by composing sign words
// delta = (d1, ..., dm) with d1 = '+' and scaling: 5^{m+1} psi(phi_delta(p)).

namespace sgspec {

enum class Sign : std::int8_t { minus = -1, plus = +1 };

using SignWord = std::vector<Sign>;

// "+-+" style rendering; the empty word renders as "".
std::string to_string(const SignWord& w);
SignWord word_from_string(std::string_view s);

inline constexpr double kPhiDomainMax = 25.0 / 4.0;

// Inverse branch of z -> z(5-z). The minus branch is evaluated as
// 2t / (5 + sqrt(25 - 4t)) so small t does not cancel. Throws
// std::domain_error for t > 25/4.
double phi(Sign s, double t);

// Outermost-first composition: phi_word((d1,...,dm), t) = phi_d1(...phi_dm(t)).
double phi_word(const SignWord& w, double t);

struct PsiOptions {
  double rel_tol = 1e-14;
  int max_iter = 200;
};

// psi(t) = (3/2) lim_k 5^k phi_-^(k)(t); strictly increasing, psi(0) = 0,
// satisfies 5 psi(phi_-(x)) = psi(x). Convergence is geometric (each step
// contracts the correction by ~t/25); a non-converging input throws.
double psi(double t, const PsiOptions& opt = {});

// 5^e for moderate |e|; exact in double up to 5^22. Negative e divides.
double pow5d(int e);

// t * 5^n computed with a single rounding in either direction.
double scale_by_pow5(double t, int n);

struct PrimitiveEigenvalue {
  double value = 0.0;
  int level = 0;                  // word length m
  std::uint32_t suffix_bits = 0;  // signs d2..dm; bit (i-2) set <=> di == '+'

  SignWord word() const;          // reconstructs (d1='+', d2, ..., dm)
};

// One family lambda^(p)_n as a lazily extended increasing list. Level-m
// words contribute a block of 2^{m-1} values (one value for m = 0, the empty
// word giving 5 psi(p)); blocks are sorted internally and concatenate in
// order because the per-level bands returned by level_band are disjoint.
class PrimitiveFamily {
 public:
  explicit PrimitiveFamily(int p);

  int p() const { return p_; }
  std::int64_t size() const { return static_cast<std::int64_t>(entries_.size()); }
  int levels_done() const { return level_; }

  // 1-based rank; extends the family as needed.
  double value(std::int64_t n);
  const PrimitiveEigenvalue& entry(std::int64_t n);

  void extend_to_rank(std::int64_t n);
  void extend_to_level(int m);

  static int level_of_rank(std::int64_t n);
  static std::pair<double, double> level_band(int m);

 private:
  void append_next_level();

  int p_;
  int level_ = -1;  // highest word length generated so far
  std::vector<PrimitiveEigenvalue> entries_;
  std::vector<double> frontier_;  // phi_s(p) over inner suffixes s, |s| = level_
  std::vector<std::uint32_t> frontier_bits_;
};

// First `count` members of the family in strictly increasing order.
std::vector<PrimitiveEigenvalue> primitive_list(int p, std::int64_t count);

}  // namespace sgspec
