#include "sgspec/weyl.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace sgspec {

namespace {

constexpr std::int64_t kRow9BaseMult = 9;  // cover multiplicity of row 9 at j = 0

double probe(double lo, double hi, double frac) { return lo + (hi - lo) * frac; }

WeylInterval make_base(IntervalKind kind, std::int64_t ell, SpectrumCatalog& cat) {
  WeylInterval w;
  w.kind = kind;
  w.ell = ell;
  w.scale_n = 0;
  w.m0 = 0;
  const double shared = 25.0 * cat.primitive_value(3, ell);
  if (kind == IntervalKind::A) {
    w.lo = 5.0 * cat.primitive_value(5, 2 * ell - 1);
    w.hi = shared;
  } else {
    w.lo = shared;
    w.hi = 5.0 * cat.primitive_value(5, 2 * ell);
  }
  const std::int64_t cum9 = cat.cover_count_through_row(2 * ell - 1, 9);
  w.g_coefficient = (kind == IntervalKind::A) ? cum9 - kRow9BaseMult : cum9;
  w.g1_value = (kind == IntervalKind::A) ? 0.0 : 1.5;
  return w;
}

}  // namespace

const char* to_string(IntervalKind k) { return k == IntervalKind::A ? "A" : "A'"; }

std::pair<WeylInterval, WeylInterval> base_intervals(std::int64_t ell,
                                                     SpectrumCatalog& cat) {
  if (ell < 1) throw std::invalid_argument("base_intervals: ell must be >= 1");
  WeylInterval a = make_base(IntervalKind::A, ell, cat);
  WeylInterval b = make_base(IntervalKind::APrime, ell, cat);

  for (const WeylInterval* w : {&a, &b}) {
    if (!(w->lo < w->hi))
      throw std::runtime_error("base interval is empty: numeric trouble");
    std::int64_t c0 = -1;
    for (double f : {0.25, 0.5, 0.75}) {
      const CountingResult c = cat.count(probe(w->lo, w->hi, f));
      if (c.at_eigenvalue)
        throw std::runtime_error("base interval probe landed on an eigenvalue");
      if (c0 < 0) c0 = c.n_tilde;
      if (c.n_tilde != c0 || c.n_tilde != w->g_coefficient)
        throw std::runtime_error("cover count not constant on a base interval");
    }
  }
  return {a, b};
}

LocateResult locate(double t, SpectrumCatalog& cat, std::int64_t ell_max) {
  if (!(t > 0.0)) throw std::invalid_argument("locate: t must be positive");
  if (ell_max < 1) throw std::invalid_argument("locate: ell_max must be >= 1");

  LocateResult res;
  res.t = t;

  const double lo1 = 5.0 * cat.primitive_value(5, 1);
  const double hi_top = 5.0 * cat.primitive_value(5, 2 * ell_max);
  const double log5t_lo = std::log(t / lo1) / std::log(5.0);
  const double log5t_hi = std::log(t / hi_top) / std::log(5.0);
  const int n_max = static_cast<int>(std::floor(log5t_lo)) + 1;
  const int n_min = static_cast<int>(std::ceil(log5t_hi)) - 1;

  for (int n = n_max; n >= n_min; --n) {
    const double t_hat = scale_by_pow5(t, -n);
    if (!(t_hat > lo1) || !(t_hat < hi_top)) continue;

    // Largest l with A_l.lo < t_hat; interval lows are increasing in l.
    std::int64_t lo = 1, hi = ell_max;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (5.0 * cat.primitive_value(5, 2 * mid - 1) < t_hat)
        lo = mid;
      else
        hi = mid - 1;
    }
    const std::int64_t ell = lo;
    const double a_lo = 5.0 * cat.primitive_value(5, 2 * ell - 1);
    const double mid = 25.0 * cat.primitive_value(3, ell);
    const double a_hi = 5.0 * cat.primitive_value(5, 2 * ell);
    if (t_hat > a_lo && t_hat < mid) {
      res.located = true;
      res.kind = IntervalKind::A;
    } else if (t_hat > mid && t_hat < a_hi) {
      res.located = true;
      res.kind = IntervalKind::APrime;
    } else {
      continue;
    }
    res.ell = ell;
    res.scale_n = n;
    res.t_hat = t_hat;
    return res;
  }
  return res;
}

WeylInterval interval_at(const LocateResult& loc, SpectrumCatalog& cat) {
  if (!loc.located) throw std::domain_error("interval_at: point not located in A");
  WeylInterval w = make_base(loc.kind, loc.ell, cat);
  w.scale_n = loc.scale_n;
  w.lo = scale_by_pow5(w.lo, loc.scale_n);
  w.hi = scale_by_pow5(w.hi, loc.scale_n);
  w.m0 = loc.scale_n < 0 ? -loc.scale_n : 0;
  return w;
}

GValues weyl_G(double t, SpectrumCatalog& cat, std::int64_t ell_max) {
  const LocateResult loc = locate(t, cat, ell_max);
  if (!loc.located)
    throw std::domain_error("weyl_G: t outside the located part of A");
  GValues g;
  g.interval = interval_at(loc, cat);
  g.G = 0.5 * static_cast<double>(g.interval.g_coefficient) *
        std::pow(loc.t_hat, -kAlpha);
  g.g1 = g.interval.g1_value;
  return g;
}

TheoremReport verify_theorem(double t, int m_max, SpectrumCatalog& cat,
                             std::int64_t ell_max) {
  TheoremReport rep;
  rep.where = locate(t, cat, ell_max);
  if (!rep.where.located)
    throw std::domain_error("verify_theorem: t outside the located part of A");
  rep.interval = interval_at(rep.where, cat);

  const std::int64_t g = rep.interval.g_coefficient;
  const std::int64_t two_g1 = rep.interval.kind == IntervalKind::A ? 0 : 3;
  const int n = rep.where.scale_n;

  rep.pass = true;
  for (int m = rep.interval.m0; m <= m_max; ++m) {
    const CountingResult c = cat.count(scale_by_pow5(t, m));
    TheoremCheckLine line;
    line.m = m;
    line.lhs_tilde = c.n_tilde;
    line.rhs_tilde = pow3i(m + n) * g;
    line.n_neumann = c.n_neumann;
    line.n_dirichlet = c.n_dirichlet;
    line.pass = !c.at_eigenvalue && line.lhs_tilde == line.rhs_tilde &&
                2 * c.n_neumann == line.rhs_tilde + two_g1 &&
                2 * c.n_dirichlet == line.rhs_tilde - two_g1;
    rep.pass = rep.pass && line.pass;
    rep.checks.push_back(line);
  }
  return rep;
}

std::vector<WeylSample> weyl_ratio_scan(double t_lo, double t_hi, int samples,
                                        SpectrumCatalog& cat, std::int64_t ell_max) {
  if (!(0.0 < t_lo && t_lo < t_hi))
    throw std::invalid_argument("weyl_ratio_scan: need 0 < t_lo < t_hi");
  if (samples < 2) throw std::invalid_argument("weyl_ratio_scan: samples must be >= 2");

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double lr = std::log(t_hi / t_lo);
  std::vector<WeylSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double t = t_lo * std::exp(lr * i / (samples - 1));
    const CountingResult c = cat.count(t);
    const double talpha = std::pow(t, kAlpha);
    WeylSample s;
    s.t = t;
    s.ratio_tilde = static_cast<double>(c.n_tilde) / talpha;
    s.ratio_neumann = static_cast<double>(c.n_neumann) / talpha;
    s.ratio_dirichlet = static_cast<double>(c.n_dirichlet) / talpha;
    const LocateResult loc = locate(t, cat, ell_max);
    s.located = loc.located;
    if (loc.located) {
      const GValues g = weyl_G(t, cat, ell_max);
      s.kind = loc.kind;
      s.ell = loc.ell;
      s.scale_n = loc.scale_n;
      s.G = g.G;
      s.g1 = g.g1;
    } else {
      s.G = nan;
      s.g1 = nan;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace sgspec
