#include "sgspec/graph_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "sgspec/catalog.hpp"
#include "sgspec/decimation.hpp"

namespace sgspec {

namespace {

constexpr double kGroupTol = 1e-8;
constexpr double kGroupSpanCap = 1e-6;
constexpr double kClosureTol = 1e-7;
constexpr double kChainTol = 1e-6;

struct Builder {
  std::map<std::pair<std::int64_t, std::int64_t>, int> ids;
  GraphApprox g;

  int vertex(std::int64_t x, std::int64_t y) {
    auto [it, fresh] = ids.try_emplace({x, y}, static_cast<int>(g.vertices.size()));
    if (fresh) g.vertices.push_back({x, y, 0});
    return it->second;
  }

  void cells(std::int64_t ox, std::int64_t oy, std::int64_t size) {
    if (size == 1) {
      const int a = vertex(ox, oy);
      const int b = vertex(ox + 1, oy);
      const int c = vertex(ox, oy + 1);
      g.edges.push_back({a, b});
      g.edges.push_back({a, c});
      g.edges.push_back({b, c});
      return;
    }
    const std::int64_t h = size / 2;
    cells(ox, oy, h);
    cells(ox + h, oy, h);
    cells(ox, oy + h, h);
  }
};

std::vector<int> degrees(const GraphApprox& g) {
  std::vector<int> deg(g.vertices.size(), 0);
  for (const auto& e : g.edges) {
    ++deg[e[0]];
    ++deg[e[1]];
  }
  return deg;
}

}  // namespace

const char* to_string(Space s) { return s == Space::SG ? "sg" : "double-cover"; }

const char* to_string(Bc c) {
  switch (c) {
    case Bc::Free: return "free";
    case Bc::Neumann: return "neumann";
    default: return "dirichlet";
  }
}

GraphApprox build_gamma(int level, Space space) {
  if (level < 1 || level > 6) throw std::invalid_argument("graph level outside [1, 6]");

  Builder b;
  const std::int64_t side = std::int64_t{1} << level;
  b.cells(0, 0, side);
  b.g.level = level;
  b.g.space = Space::SG;
  b.g.boundary = {b.vertex(0, 0), b.vertex(side, 0), b.vertex(0, side)};
  if (space == Space::SG) return std::move(b.g);

  // Second sheet glued along the three corners.
  GraphApprox dc;
  dc.level = level;
  dc.space = Space::DoubleCover;
  dc.vertices = b.g.vertices;
  dc.edges = b.g.edges;
  std::vector<int> twin(b.g.vertices.size());
  std::vector<bool> is_corner(b.g.vertices.size(), false);
  for (int v : b.g.boundary) is_corner[v] = true;
  for (std::size_t v = 0; v < b.g.vertices.size(); ++v) {
    if (is_corner[v]) {
      twin[v] = static_cast<int>(v);
    } else {
      twin[v] = static_cast<int>(dc.vertices.size());
      auto coord = b.g.vertices[v];
      coord[2] = 1;
      dc.vertices.push_back(coord);
    }
  }
  for (const auto& e : b.g.edges) dc.edges.push_back({twin[e[0]], twin[e[1]]});
  return dc;
}

GraphSpectrum graph_spectrum(const GraphApprox& g, Bc condition) {
  if (condition == Bc::Dirichlet && g.boundary.empty())
    throw std::invalid_argument("dirichlet condition needs a boundary");

  std::vector<int> keep;
  std::vector<int> col(g.vertices.size(), -1);
  {
    std::vector<bool> drop(g.vertices.size(), false);
    if (condition == Bc::Dirichlet)
      for (int v : g.boundary) drop[v] = true;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
      if (!drop[v]) {
        col[v] = static_cast<int>(keep.size());
        keep.push_back(static_cast<int>(v));
      }
  }

  const int n = static_cast<int>(keep.size());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges) {
    const int a = col[e[0]], b = col[e[1]];
    if (a >= 0) L(a, a) += 1.0;
    if (b >= 0) L(b, b) += 1.0;
    if (a >= 0 && b >= 0) {
      L(a, b) -= 1.0;
      L(b, a) -= 1.0;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("graph eigensolver did not converge");

  GraphSpectrum s;
  s.level = g.level;
  s.space = g.space;
  s.condition = condition;
  s.raw.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);

  // Residual spot-check on a fixed-seed sample of eigenpairs.
  const double l_norm = L.cwiseAbs().rowwise().sum().maxCoeff();
  std::mt19937 rng(12345u);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int trial = 0; trial < std::min(10, n); ++trial) {
    const int i = n <= 10 ? trial : pick(rng);
    const Eigen::VectorXd v = es.eigenvectors().col(i);
    const double r = (L * v - es.eigenvalues()[i] * v).norm();
    s.max_residual = std::max(s.max_residual, r);
    if (r > 1e-8 * l_norm) throw std::runtime_error("eigenpair residual too large");
  }

  for (double mu : s.raw) {
    if (!s.groups.empty() && mu - s.groups.back().value <= kGroupTol) {
      EigenvalueGroup& grp = s.groups.back();
      grp.value = (grp.value * grp.multiplicity + mu) / (grp.multiplicity + 1);
      ++grp.multiplicity;
    } else {
      s.groups.push_back({mu, 1});
    }
  }
  // Validate the grouping scale: distinct eigenvalues must stay far apart.
  std::size_t i = 0;
  for (const auto& grp : s.groups) {
    const double span = s.raw[i + grp.multiplicity - 1] - s.raw[i];
    if (span > kGroupSpanCap) throw std::runtime_error("eigenvalue group spans > 1e-6");
    i += grp.multiplicity;
  }
  return s;
}

ClosureReport decimation_closure_report(int m_max) {
  if (m_max < 1 || m_max > 6)
    throw std::invalid_argument("closure report level outside [1, 6]");

  ClosureReport rep;
  rep.pass = true;
  std::vector<GraphSpectrum> cover_spec(m_max + 1);

  for (int m = 1; m <= m_max; ++m) {
    const GraphApprox dc = build_gamma(m, Space::DoubleCover);
    const GraphApprox sg = build_gamma(m, Space::SG);
    cover_spec[m] = graph_spectrum(dc, Bc::Free);
    const GraphSpectrum neu = graph_spectrum(sg, Bc::Neumann);
    const GraphSpectrum dir = graph_spectrum(sg, Bc::Dirichlet);

    ClosureLevelReport lvl;
    lvl.level = m;
    lvl.free_count = static_cast<std::int64_t>(cover_spec[m].raw.size());
    lvl.neumann_count = static_cast<std::int64_t>(neu.raw.size());
    lvl.dirichlet_count = static_cast<std::int64_t>(dir.raw.size());
    lvl.counts_sum_ok = lvl.neumann_count + lvl.dirichlet_count == lvl.free_count &&
                        lvl.free_count == pow3i(m + 1);
    lvl.max_residual = std::max({cover_spec[m].max_residual, neu.max_residual,
                                 dir.max_residual});

    // Free cover spectrum vs the union of the two gasket spectra.
    std::vector<double> split;
    split.reserve(neu.raw.size() + dir.raw.size());
    split.insert(split.end(), neu.raw.begin(), neu.raw.end());
    split.insert(split.end(), dir.raw.begin(), dir.raw.end());
    std::sort(split.begin(), split.end());
    for (std::size_t i = 0; i < split.size() && i < cover_spec[m].raw.size(); ++i)
      lvl.split_multiset_defect =
          std::max(lvl.split_multiset_defect, std::abs(split[i] - cover_spec[m].raw[i]));

    // count_N - count_D over every threshold between (and beyond) values.
    lvl.nd_diff_min = lvl.nd_diff_max = 1;  // below the spectrum: 1 - 0
    for (double v : split) {
      const double theta = v + 1e-9;
      const std::int64_t cn =
          std::upper_bound(neu.raw.begin(), neu.raw.end(), theta) - neu.raw.begin();
      const std::int64_t cd =
          std::upper_bound(dir.raw.begin(), dir.raw.end(), theta) - dir.raw.begin();
      lvl.nd_diff_min = std::min(lvl.nd_diff_min, cn - cd);
      lvl.nd_diff_max = std::max(lvl.nd_diff_max, cn - cd);
    }

    if (m >= 2) {
      const GraphSpectrum& prev = cover_spec[m - 1];
      for (const auto& grp : cover_spec[m].groups) {
        ClosureLine line;
        line.value = grp.value;
        line.multiplicity = grp.multiplicity;
        line.image = grp.value * (5.0 - grp.value);
        if (grp.value <= kGroupTol) {
          line.status = "zero";
        } else if (std::abs(grp.value - 2.0) <= kGroupTol ||
                   std::abs(grp.value - 5.0) <= kGroupTol ||
                   std::abs(grp.value - 6.0) <= kGroupTol) {
          line.status = "branch-point";
        } else {
          bool hit = false;
          for (const auto& pg : prev.groups)
            if (std::abs(line.image - pg.value) <= kClosureTol) {
              hit = true;
              break;
            }
          line.status = hit ? "decimates" : "violation";
          if (!hit) {
            ++lvl.violations;
            rep.pass = false;
          }
        }
        lvl.lines.push_back(line);
      }
    }
    rep.levels.push_back(std::move(lvl));
  }
  return rep;
}

double fractal_limit_estimate(int first_level, const std::vector<double>& mu) {
  if (mu.empty()) throw std::invalid_argument("empty eigenvalue sequence");
  if (first_level < 0) throw std::invalid_argument("negative level");
  for (double m : mu)
    if (!(m >= 0.0 && m <= kPhiDomainMax))
      throw std::invalid_argument("eigenvalue outside [0, 25/4]");
  for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
    const double back = mu[i + 1] * (5.0 - mu[i + 1]);
    if (std::abs(back - mu[i]) > kChainTol * std::max(1.0, std::abs(mu[i])))
      throw std::invalid_argument("sequence not decimation-consistent");
  }
  const int last_level = first_level + static_cast<int>(mu.size()) - 1;
  return scale_by_pow5(psi(mu.back()), last_level);
}

}  // namespace sgspec
