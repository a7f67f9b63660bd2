#include "sgspec/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace sgspec {

namespace {

std::int64_t powi(std::int64_t base, int e) {
  if (e < 0) throw std::invalid_argument("integer power: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / base)
      throw std::overflow_error("integer power overflow");
    r *= base;
  }
  return r;
}

}  // namespace

std::int64_t pow3i(int e) { return powi(3, e); }
std::int64_t pow5i(int e) { return powi(5, e); }

CycleDecomposition decompose(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("cycle index must be >= 1");
  CycleDecomposition d;
  d.k = k;
  d.j = 0;
  while ((k & 1) == 0) {
    k >>= 1;
    ++d.j;
  }
  d.ell = (k + 1) / 2;
  return d;
}

std::string SpectralLine::label() const {
  if (family == 0) return "zero";
  char buf[64];
  if (power == 0)
    std::snprintf(buf, sizeof buf, "lam(%d,%lld)", family, static_cast<long long>(rank));
  else if (power == 1)
    std::snprintf(buf, sizeof buf, "5*lam(%d,%lld)", family, static_cast<long long>(rank));
  else
    std::snprintf(buf, sizeof buf, "5^%d*lam(%d,%lld)", power, family,
                  static_cast<long long>(rank));
  return buf;
}

SpectrumCatalog::SpectrumCatalog(double count_rel_tol) : rel_tol_(count_rel_tol) {
  if (!(rel_tol_ > 0.0) || rel_tol_ >= 1e-3)
    throw std::invalid_argument("counting tolerance out of range");
  SpectralLine zero;
  zero.value = 0.0;
  zero.mult_neumann = 1;
  zero.mult_dirichlet = 0;
  zero.mult_tilde = 1;
  lines_.push_back(zero);
  values_.push_back(0.0);
  cum_n_.push_back(1);
  cum_d_.push_back(0);
  cum_t_.push_back(1);
}

PrimitiveFamily& SpectrumCatalog::family_ref(int family) {
  switch (family) {
    case 2: return fam2_;
    case 3: return fam3_;
    case 5: return fam5_;
    default: throw std::invalid_argument("family must be 2, 3 or 5");
  }
}

std::int64_t SpectrumCatalog::cycles_generated() const {
  std::shared_lock lk(mu_);
  return static_cast<std::int64_t>((lines_.size() - 1) / 10);
}

void SpectrumCatalog::append_cycle_locked(std::int64_t k) {
  const CycleDecomposition d = decompose(k);
  const std::int64_t three = pow3i(d.j + 1);     // 3^{j+1}
  const double p5j1 = pow5d(d.j + 1);
  const double p5j2 = pow5d(d.j + 2);

  struct RowSpec {
    double value;
    std::int64_t mn, md;
    int family;
    std::int64_t rank;
    int power;
  };
  const RowSpec rows[10] = {
      {fam2_.value(2 * k - 1), 0, 1, 2, 2 * k - 1, 0},
      {fam3_.value(2 * k - 1), 2, 0, 3, 2 * k - 1, 0},
      {fam5_.value(2 * k - 1), 0, 2, 5, 2 * k - 1, 0},
      {5.0 * fam3_.value(k), 3, 0, 3, k, 1},
      {fam5_.value(2 * k), 0, 2, 5, 2 * k, 0},
      {fam3_.value(2 * k), 2, 0, 3, 2 * k, 0},
      {fam2_.value(2 * k), 0, 1, 2, 2 * k, 0},
      {p5j1 * fam5_.value(2 * d.ell - 1), (three - 1) / 2, (three + 3) / 2, 5,
       2 * d.ell - 1, d.j + 1},
      {p5j2 * fam3_.value(d.ell), (3 * three + 3) / 2, (3 * three - 3) / 2, 3, d.ell,
       d.j + 2},
      {p5j1 * fam5_.value(2 * d.ell), (three - 1) / 2, (three + 3) / 2, 5, 2 * d.ell,
       d.j + 1},
  };

  for (int r = 0; r < 10; ++r) {
    const RowSpec& rs = rows[r];
    if (!(rs.value > values_.back())) {
      char buf[200];
      std::snprintf(buf, sizeof buf,
                    "catalog ordering violation at cycle %lld row %d: %.17g after %.17g",
                    static_cast<long long>(k), r + 1, rs.value, values_.back());
      throw std::runtime_error(buf);
    }
    SpectralLine line;
    line.value = rs.value;
    line.mult_neumann = rs.mn;
    line.mult_dirichlet = rs.md;
    line.mult_tilde = rs.mn + rs.md;
    line.cycle = k;
    line.row = r + 1;
    line.family = rs.family;
    line.rank = rs.rank;
    line.power = rs.power;
    lines_.push_back(line);
    values_.push_back(line.value);
    cum_n_.push_back(cum_n_.back() + line.mult_neumann);
    cum_d_.push_back(cum_d_.back() + line.mult_dirichlet);
    cum_t_.push_back(cum_t_.back() + line.mult_tilde);
  }
}

void SpectrumCatalog::ensure_cycles_locked(std::int64_t k) {
  std::int64_t have = static_cast<std::int64_t>((lines_.size() - 1) / 10);
  while (have < k) append_cycle_locked(++have);
}

void SpectrumCatalog::ensure_value_coverage_locked(double t) {
  // A last value safely beyond the inclusion window t * (1 + tol) guarantees
  // the catalog is complete at t.
  const double target = t * (1.0 + 10.0 * rel_tol_);
  std::int64_t have = static_cast<std::int64_t>((lines_.size() - 1) / 10);
  while (values_.back() <= target) append_cycle_locked(++have);
}

bool SpectrumCatalog::covered_locked(double t) const {
  return values_.back() > t * (1.0 + 10.0 * rel_tol_);
}

CountingResult SpectrumCatalog::count_locked(double t) const {
  // Inclusive comparison: v counts when v <= t or |v - t| <= tol * max(v, t),
  // which for v > t collapses to v <= t / (1 - tol).
  const double upper = t / (1.0 - rel_tol_);
  const auto it = std::upper_bound(values_.begin(), values_.end(), upper);
  const std::size_t idx = static_cast<std::size_t>(it - values_.begin());

  CountingResult res;
  res.t = t;
  if (idx == 0) return res;
  res.n_neumann = cum_n_[idx - 1];
  res.n_dirichlet = cum_d_[idx - 1];
  res.n_tilde = cum_t_[idx - 1];
  const double v = values_[idx - 1];
  res.at_eigenvalue = std::abs(v - t) <= rel_tol_ * std::max(std::abs(v), std::abs(t));
  return res;
}

CountingResult SpectrumCatalog::count(double t) {
  if (!(t > 0.0)) throw std::invalid_argument("count: t must be positive");
  {
    std::shared_lock lk(mu_);
    if (covered_locked(t)) return count_locked(t);
  }
  std::unique_lock lk(mu_);
  ensure_value_coverage_locked(t);
  return count_locked(t);
}

CountingResult SpectrumCatalog::count_at_line(int family, std::int64_t rank, int power) {
  std::unique_lock lk(mu_);
  const double v = pow5d(power) * family_ref(family).value(rank);
  ensure_value_coverage_locked(v);

  // Scan the tolerance window around v for the exact line.
  auto lo = std::lower_bound(values_.begin(), values_.end(), v * (1.0 - 2.0 * rel_tol_));
  auto hi = std::upper_bound(values_.begin(), values_.end(), v * (1.0 + 2.0 * rel_tol_));
  for (auto it = lo; it != hi; ++it) {
    const std::size_t i = static_cast<std::size_t>(it - values_.begin());
    const SpectralLine& ln = lines_[i];
    if (ln.family == family && ln.rank == rank && ln.power == power) {
      CountingResult res;
      res.t = v;
      res.n_neumann = cum_n_[i];
      res.n_dirichlet = cum_d_[i];
      res.n_tilde = cum_t_[i];
      res.at_eigenvalue = true;
      return res;
    }
  }
  return count_locked(v);  // not a spectrum member (e.g. 5-powers of family 2)
}

std::array<SpectralLine, 10> SpectrumCatalog::cycle_rows(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("cycle index must be >= 1");
  std::array<SpectralLine, 10> out;
  {
    std::shared_lock lk(mu_);
    if (static_cast<std::int64_t>((lines_.size() - 1) / 10) >= k) {
      std::copy_n(lines_.begin() + 10 * (k - 1) + 1, 10, out.begin());
      return out;
    }
  }
  std::unique_lock lk(mu_);
  ensure_cycles_locked(k);
  std::copy_n(lines_.begin() + 10 * (k - 1) + 1, 10, out.begin());
  return out;
}

std::vector<SpectralLine> SpectrumCatalog::spectrum(std::int64_t k_max) {
  if (k_max < 1) throw std::invalid_argument("spectrum: k_max must be >= 1");
  std::unique_lock lk(mu_);
  ensure_cycles_locked(k_max);
  return std::vector<SpectralLine>(lines_.begin(), lines_.begin() + 10 * k_max + 1);
}

std::int64_t SpectrumCatalog::cover_count_through_row(std::int64_t k, int row) {
  if (k < 1 || row < 1 || row > 10)
    throw std::invalid_argument("cover_count_through_row: bad cycle/row");
  {
    std::shared_lock lk(mu_);
    if (static_cast<std::int64_t>((lines_.size() - 1) / 10) >= k)
      return cum_t_[static_cast<std::size_t>(10 * (k - 1) + row)];
  }
  std::unique_lock lk(mu_);
  ensure_cycles_locked(k);
  return cum_t_[static_cast<std::size_t>(10 * (k - 1) + row)];
}

std::array<std::int64_t, 10> SpectrumCatalog::difference_profile(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("cycle index must be >= 1");
  std::unique_lock lk(mu_);
  ensure_cycles_locked(k);
  // True cumulative N - D, so a deviation in any earlier cycle shows up here
  // instead of being masked by an assumed carried-in value.
  std::array<std::int64_t, 10> prof;
  for (int r = 1; r <= 10; ++r) {
    const std::size_t i = static_cast<std::size_t>(10 * (k - 1) + r);
    prof[r - 1] = cum_n_[i] - cum_d_[i];
  }
  return prof;
}

double SpectrumCatalog::primitive_value(int family, std::int64_t rank) {
  std::unique_lock lk(mu_);
  return family_ref(family).value(rank);
}

}  // namespace sgspec
