#include "sgspec/export.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace sgspec {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string membership_label(bool located, IntervalKind kind, std::int64_t ell, int n) {
  if (!located) return "-";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s(ell=%lld,n=%d)", to_string(kind),
                static_cast<long long>(ell), n);
  return buf;
}

}  // namespace

void write_catalog_csv(std::ostream& os, const std::vector<SpectralLine>& lines) {
  os << "value,cycle,row,mult_neumann,mult_dirichlet,mult_tilde,label\n";
  for (const auto& ln : lines) {
    os << fmt17(ln.value) << ',' << ln.cycle << ',' << ln.row << ',' << ln.mult_neumann
       << ',' << ln.mult_dirichlet << ',' << ln.mult_tilde << ',' << ln.label() << '\n';
  }
}

ordered_json catalog_json(const std::vector<SpectralLine>& lines) {
  ordered_json arr = ordered_json::array();
  for (const auto& ln : lines) {
    arr.push_back({{"value", ln.value},
                   {"cycle", ln.cycle},
                   {"row", ln.row},
                   {"mult_neumann", ln.mult_neumann},
                   {"mult_dirichlet", ln.mult_dirichlet},
                   {"mult_tilde", ln.mult_tilde},
                   {"label", ln.label()}});
  }
  return ordered_json{{"lines", std::move(arr)}};
}

void write_primitive_csv(std::ostream& os, int family,
                         const std::vector<PrimitiveEigenvalue>& entries) {
  os << "family,rank,level,word,value\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    os << family << ',' << (i + 1) << ',' << e.level << ',' << to_string(e.word()) << ','
       << fmt17(e.value) << '\n';
  }
}

ordered_json primitive_json(int family, const std::vector<PrimitiveEigenvalue>& entries) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    arr.push_back({{"rank", i + 1},
                   {"level", e.level},
                   {"word", to_string(e.word())},
                   {"value", e.value}});
  }
  return ordered_json{{"family", family}, {"eigenvalues", std::move(arr)}};
}

void write_count_csv(std::ostream& os, const CountingResult& c) {
  os << "t,count_neumann,count_dirichlet,count_tilde,at_eigenvalue\n";
  os << fmt17(c.t) << ',' << c.n_neumann << ',' << c.n_dirichlet << ',' << c.n_tilde << ','
     << (c.at_eigenvalue ? 1 : 0) << '\n';
}

ordered_json count_json(const CountingResult& c) {
  return ordered_json{{"t", c.t},
                      {"count_neumann", c.n_neumann},
                      {"count_dirichlet", c.n_dirichlet},
                      {"count_tilde", c.n_tilde},
                      {"at_eigenvalue", c.at_eigenvalue}};
}

void write_weyl_scan_csv(std::ostream& os, const std::vector<WeylSample>& samples) {
  os << "t,ratio_tilde,ratio_neumann,ratio_dirichlet,membership,G,G1\n";
  for (const auto& s : samples) {
    os << fmt17(s.t) << ',' << fmt17(s.ratio_tilde) << ',' << fmt17(s.ratio_neumann) << ','
       << fmt17(s.ratio_dirichlet) << ','
       << membership_label(s.located, s.kind, s.ell, s.scale_n) << ',' << fmt17(s.G) << ','
       << fmt17(s.g1) << '\n';
  }
}

ordered_json weyl_scan_json(const std::vector<WeylSample>& samples) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : samples) {
    ordered_json row{{"t", s.t},
                     {"ratio_tilde", s.ratio_tilde},
                     {"ratio_neumann", s.ratio_neumann},
                     {"ratio_dirichlet", s.ratio_dirichlet},
                     {"membership", membership_label(s.located, s.kind, s.ell, s.scale_n)}};
    if (s.located) {
      row["G"] = s.G;
      row["G1"] = s.g1;
    } else {
      row["G"] = nullptr;
      row["G1"] = nullptr;
    }
    arr.push_back(std::move(row));
  }
  return ordered_json{{"samples", std::move(arr)}};
}

void write_cover_csv(std::ostream& os, const std::vector<CoverInterval>& intervals) {
  os << "depth,word,lo,hi,length\n";
  for (const auto& iv : intervals) {
    os << iv.word.size() << ',' << to_string(iv.word) << ',' << fmt17(iv.lo) << ','
       << fmt17(iv.hi) << ',' << fmt17(iv.length()) << '\n';
  }
}

void write_gaps_csv(std::ostream& os, int depth) {
  os << "heap,generation,lo,hi,length\n";
  const std::uint64_t last = std::uint64_t{1} << depth;
  for (std::uint64_t h = 1; h < last; ++h) {
    Interval b = b_interval(h);
    int gen = 0;
    for (std::uint64_t v = h; v > 1; v >>= 1) ++gen;
    os << h << ',' << gen << ',' << fmt17(b.lo) << ',' << fmt17(b.hi) << ','
       << fmt17(b.length()) << '\n';
  }
}

ordered_json julia_measure_json(int depth_max) {
  ordered_json arr = ordered_json::array();
  for (int m = 1; m <= depth_max; ++m) {
    const double cov = cover_measure(m);
    const double gaps = b_total_length(m);
    arr.push_back({{"depth", m},
                   {"cover_measure", cov},
                   {"gap_measure", gaps},
                   {"total", cov + gaps}});
  }
  return ordered_json{{"levels", std::move(arr)}};
}

ordered_json classify_json(double t, int depth) {
  ClassifyResult r = classify(t, depth);
  ordered_json out{{"t", t}, {"depth", depth}, {"in_gap", r.in_gap}};
  if (r.in_gap) {
    out["heap_index"] = r.heap_index;
    out["generation"] = r.generation;
    out["gap_lo"] = r.gap.lo;
    out["gap_hi"] = r.gap.hi;
  }
  return out;
}

void write_graph_spectrum_csv(std::ostream& os, const GraphSpectrum& s,
                              const std::vector<std::string>* statuses) {
  os << "level,space,condition,eigenvalue,multiplicity,closure_status\n";
  for (std::size_t i = 0; i < s.groups.size(); ++i) {
    const auto& g = s.groups[i];
    const std::string status =
        statuses && i < statuses->size() ? (*statuses)[i] : std::string("-");
    os << s.level << ',' << to_string(s.space) << ',' << to_string(s.condition) << ','
       << fmt17(g.value) << ',' << g.multiplicity << ',' << status << '\n';
  }
}

ordered_json closure_report_json(const ClosureReport& rep) {
  ordered_json levels = ordered_json::array();
  for (const auto& lv : rep.levels) {
    ordered_json lines = ordered_json::array();
    for (const auto& ln : lv.lines) {
      ordered_json row{{"eigenvalue", ln.value},
                       {"multiplicity", ln.multiplicity},
                       {"status", ln.status}};
      if (std::isfinite(ln.image)) row["image"] = ln.image;
      lines.push_back(std::move(row));
    }
    levels.push_back({{"level", lv.level},
                      {"free_count", lv.free_count},
                      {"neumann_count", lv.neumann_count},
                      {"dirichlet_count", lv.dirichlet_count},
                      {"counts_sum_ok", lv.counts_sum_ok},
                      {"split_multiset_defect", lv.split_multiset_defect},
                      {"nd_diff_min", lv.nd_diff_min},
                      {"nd_diff_max", lv.nd_diff_max},
                      {"max_residual", lv.max_residual},
                      {"violations", lv.violations},
                      {"lines", std::move(lines)}});
  }
  return ordered_json{{"pass", rep.pass}, {"levels", std::move(levels)}};
}

ordered_json theorem_report_json(const TheoremReport& rep) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"m", c.m},
                      {"lhs_tilde", c.lhs_tilde},
                      {"rhs_tilde", c.rhs_tilde},
                      {"count_neumann", c.n_neumann},
                      {"count_dirichlet", c.n_dirichlet},
                      {"pass", c.pass}});
  }
  const auto& w = rep.where;
  return ordered_json{
      {"t", w.t},
      {"located", w.located},
      {"kind", w.located ? to_string(w.kind) : "-"},
      {"ell", w.ell},
      {"scale_n", w.scale_n},
      {"t_hat", w.t_hat},
      {"g_coefficient", rep.interval.g_coefficient},
      {"g1", rep.interval.g1_value},
      {"m0", rep.interval.m0},
      {"pass", rep.pass},
      {"checks", std::move(checks)}};
}

}  // namespace sgspec
