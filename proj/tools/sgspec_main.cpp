#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "sgspec/config.hpp"
#include "sgspec/export.hpp"
#include "sgspec/verify.hpp"

namespace {

using namespace sgspec;

struct IoOpts {
  std::string config;
  std::string format;
  std::string output;
};

void add_io_opts(CLI::App* cmd, IoOpts& io) {
  cmd->add_option("--config", io.config, "JSON config file; explicit flags win");
  cmd->add_option("--format", io.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", io.output, "write to this file instead of stdout");
}

RunConfig resolve(const IoOpts& io) {
  RunConfig cfg = io.config.empty() ? RunConfig{} : load_config(io.config);
  if (!io.format.empty()) cfg.format = io.format;
  if (!io.output.empty()) cfg.output = io.output;
  cfg.validate();
  return cfg;
}

// Keeps the ofstream alive while exposing a plain ostream reference.
struct Sink {
  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &std::cout;

  explicit Sink(const RunConfig& cfg) {
    if (!cfg.output.empty()) {
      file = std::make_unique<std::ofstream>(cfg.output);
      if (!*file) throw std::runtime_error("cannot open output file: " + cfg.output);
      os = file.get();
    }
  }
};

void emit_json(std::ostream& os, const ordered_json& j) { os << j.dump(2) << '\n'; }

int run_eigs(const IoOpts& io, int family, std::int64_t count, std::int64_t cycles) {
  const RunConfig cfg = resolve(io);
  Sink sink(cfg);
  if (cycles > 0) {
    SpectrumCatalog cat(cfg.count_rel_tol);
    const auto lines = cat.spectrum(cycles);
    if (cfg.format == "json")
      emit_json(*sink.os, catalog_json(lines));
    else
      write_catalog_csv(*sink.os, lines);
    return 0;
  }
  const auto entries = primitive_list(family, count);
  if (cfg.format == "json")
    emit_json(*sink.os, primitive_json(family, entries));
  else
    write_primitive_csv(*sink.os, family, entries);
  return 0;
}

int run_count(const IoOpts& io, double t, bool have_t, const std::string& at, int power) {
  const RunConfig cfg = resolve(io);
  Sink sink(cfg);
  SpectrumCatalog cat(cfg.count_rel_tol);
  CountingResult res;
  if (!at.empty()) {
    int family = 0;
    long long rank = 0;
    if (std::sscanf(at.c_str(), "%d,%lld", &family, &rank) != 2)
      throw CLI::ValidationError("--at-eigenvalue expects FAMILY,RANK (e.g. 3,1)");
    res = cat.count_at_line(family, rank, power);
  } else if (have_t) {
    res = cat.count(t);
  } else {
    throw CLI::ValidationError("count needs a threshold or --at-eigenvalue");
  }
  if (cfg.format == "json")
    emit_json(*sink.os, count_json(res));
  else
    write_count_csv(*sink.os, res);
  return 0;
}

int run_verify(const IoOpts& io, const std::string& suite, const VerifyOptions& opt) {
  const RunConfig cfg = resolve(io);
  Sink sink(cfg);
  SpectrumCatalog cat(cfg.count_rel_tol);

  std::vector<SuiteReport> reports;
  if (suite == "all") {
    reports = verify_all(cat, opt);
  } else if (suite == "numerics") {
    reports.push_back(verify_numerics(opt));
  } else if (suite == "table") {
    reports.push_back(verify_table(cat, opt));
  } else if (suite == "lemma") {
    reports.push_back(verify_lemma(cat, opt));
  } else if (suite == "theorem") {
    reports.push_back(verify_theorem_suite(cat, opt));
  } else if (suite == "julia") {
    reports.push_back(verify_julia(cat, opt));
  } else if (suite == "oracle") {
    reports.push_back(verify_oracle(cat, opt));
  } else {
    throw CLI::ValidationError("unknown suite: " + suite);
  }

  bool all_pass = true;
  ordered_json jsuites = ordered_json::array();
  for (const auto& rep : reports) {
    all_pass = all_pass && rep.pass;
    ordered_json jchecks = ordered_json::array();
    for (const auto& c : rep.checks) {
      jchecks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    jsuites.push_back({{"suite", rep.suite}, {"pass", rep.pass}, {"checks", std::move(jchecks)}});
  }
  const ordered_json report{{"pass", all_pass}, {"suites", std::move(jsuites)}};

  if (cfg.format == "json") {
    emit_json(*sink.os, report);
  } else {
    for (const auto& rep : reports) {
      for (const auto& c : rep.checks) {
        *sink.os << (c.pass ? "[PASS] " : "[FAIL] ") << rep.suite << ": " << c.name;
        if (!c.detail.empty()) *sink.os << " (" << c.detail << ")";
        *sink.os << '\n';
      }
    }
    *sink.os << (all_pass ? "verify: all checks passed\n" : "verify: FAILURES above\n");
  }
  return all_pass ? 0 : 1;
}

int run_weyl(const IoOpts& io, double at, bool have_at, int m_max, double from, double to,
             int samples) {
  const RunConfig cfg = resolve(io);
  Sink sink(cfg);
  SpectrumCatalog cat(cfg.count_rel_tol);
  if (have_at) {
    const auto rep = verify_theorem(at, m_max, cat, cfg.ell_max);
    emit_json(*sink.os, theorem_report_json(rep));
    return rep.pass ? 0 : 1;
  }
  const auto scan = weyl_ratio_scan(from, to, samples, cat, cfg.ell_max);
  if (cfg.format == "json")
    emit_json(*sink.os, weyl_scan_json(scan));
  else
    write_weyl_scan_csv(*sink.os, scan);
  return 0;
}

int run_julia(const IoOpts& io, const std::string& what, int depth, double t) {
  const RunConfig cfg = resolve(io);
  Sink sink(cfg);
  if (depth > cfg.cover_depth_cap)
    throw CLI::ValidationError("--depth exceeds the configured cap");
  if (what == "cover") {
    write_cover_csv(*sink.os, cover(depth));
  } else if (what == "gaps") {
    write_gaps_csv(*sink.os, depth);
  } else if (what == "measure") {
    emit_json(*sink.os, julia_measure_json(depth));
  } else if (what == "classify") {
    emit_json(*sink.os, classify_json(t, depth));
  } else {
    throw CLI::ValidationError("unknown julia action: " + what);
  }
  return 0;
}

int run_oracle(const IoOpts& io, bool closure, int level, const std::string& space,
               const std::string& condition) {
  const RunConfig cfg = resolve(io);
  Sink sink(cfg);
  if (level > cfg.oracle_level_cap)
    throw CLI::ValidationError("--level exceeds the configured cap");
  if (closure) {
    const auto rep = decimation_closure_report(level);
    emit_json(*sink.os, closure_report_json(rep));
    return rep.pass ? 0 : 1;
  }
  const Space sp = space == "sg" ? Space::SG : Space::DoubleCover;
  Bc bc = Bc::Free;
  if (condition == "neumann") bc = Bc::Neumann;
  if (condition == "dirichlet") bc = Bc::Dirichlet;
  const auto spec = graph_spectrum(build_gamma(level, sp), bc);

  // The closure statuses only apply to the cover's full spectrum.
  if (sp == Space::DoubleCover && bc == Bc::Free && level >= 2) {
    const auto rep = decimation_closure_report(level);
    const auto& lines = rep.levels.back().lines;
    std::vector<std::string> statuses;
    for (const auto& ln : lines) statuses.push_back(ln.status);
    write_graph_spectrum_csv(*sink.os, spec, &statuses);
  } else {
    write_graph_spectrum_csv(*sink.os, spec);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral decimation on the Sierpinski gasket and its double cover"};
  app.require_subcommand(1);

  IoOpts io_eigs, io_count, io_verify, io_weyl, io_julia, io_oracle;

  auto* eigs = app.add_subcommand("eigs", "list eigenvalues");
  int family = 3;
  std::int64_t count_n = 8, cycles = 0;
  eigs->add_option("--family", family, "primitive family: 2, 3 or 5")
      ->check(CLI::IsMember({2, 3, 5}));
  eigs->add_option("--count", count_n, "how many family members")
      ->check(CLI::PositiveNumber);
  eigs->add_option("--cycles", cycles,
                   "emit the full catalog for this many cycles instead");
  add_io_opts(eigs, io_eigs);

  auto* cnt = app.add_subcommand("count", "evaluate the counting functions");
  double threshold = 0.0;
  std::string at_line;
  int power = 0;
  auto* t_opt = cnt->add_option("t", threshold, "threshold");
  cnt->add_option("--at-eigenvalue", at_line, "FAMILY,RANK: count at that exact line");
  cnt->add_option("--power", power, "extra factor 5^power for --at-eigenvalue");
  add_io_opts(cnt, io_count);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  VerifyOptions vopt;
  int julia_depth = vopt.julia_measure_depth;
  ver->add_option("suite", suite, "table, lemma, theorem, julia, oracle, numerics or all")
      ->check(CLI::IsMember({"table", "lemma", "theorem", "julia", "oracle", "numerics", "all"}));
  ver->add_option("--k-max", vopt.table_k_max, "cycles checked row by row");
  ver->add_option("--n-max", vopt.lemma_n_max, "odd-index range in the scaling identity");
  ver->add_option("--j-max", vopt.lemma_j_max, "dyadic exponent range");
  ver->add_option("--l-max", vopt.theorem_ell_max, "base intervals probed");
  ver->add_option("--m-max", vopt.theorem_m_max, "renormalization steps per probe");
  ver->add_option("--depth", julia_depth, "cover depth for the measure bounds");
  ver->add_option("--level-max", vopt.oracle_level_max, "graph levels solved")
      ->check(CLI::Range(1, 6));
  add_io_opts(ver, io_verify);

  auto* weyl = app.add_subcommand("weyl", "exact Weyl structure");
  double at = 0.0, from = 25.0, to = 78125.0;
  int samples = 200, m_max = 6;
  auto* at_opt = weyl->add_option("--at", at, "verify the identity at this threshold");
  weyl->add_option("--m-max", m_max, "renormalization steps for --at");
  weyl->add_option("--from", from, "scan start");
  weyl->add_option("--to", to, "scan end");
  weyl->add_option("--samples", samples, "scan sample count")->check(CLI::PositiveNumber);
  add_io_opts(weyl, io_weyl);

  auto* julia = app.add_subcommand("julia", "exceptional set cover and gaps");
  std::string what = "cover";
  int depth = 6;
  double classify_t = 2.5;
  julia->add_option("action", what, "cover, gaps, measure or classify")
      ->check(CLI::IsMember({"cover", "gaps", "measure", "classify"}));
  julia->add_option("--depth", depth, "word length / tree depth")->check(CLI::Range(1, 40));
  julia->add_option("--t", classify_t, "point to classify");
  add_io_opts(julia, io_julia);

  auto* oracle = app.add_subcommand("oracle", "graph-Laplacian cross-check");
  bool closure = false;
  int level = 3;
  std::string space = "double-cover", condition = "free";
  oracle->add_option("--level", level, "approximation level")->check(CLI::Range(1, 6));
  oracle->add_option("--space", space, "sg or double-cover")
      ->check(CLI::IsMember({"sg", "double-cover"}));
  oracle->add_option("--condition", condition, "free, neumann or dirichlet")
      ->check(CLI::IsMember({"free", "neumann", "dirichlet"}));
  oracle->add_flag("--closure", closure, "emit the decimation closure report");
  add_io_opts(oracle, io_oracle);

  CLI11_PARSE(app, argc, argv);

  try {
    if (eigs->parsed()) return run_eigs(io_eigs, family, count_n, cycles);
    if (cnt->parsed())
      return run_count(io_count, threshold, t_opt->count() > 0, at_line, power);
    if (ver->parsed()) {
      vopt.julia_measure_depth = julia_depth;
      if (julia_depth < vopt.julia_exhaustion_depth) vopt.julia_exhaustion_depth = julia_depth;
      vopt.julia_ell_max = vopt.theorem_ell_max;
      return run_verify(io_verify, suite, vopt);
    }
    if (weyl->parsed())
      return run_weyl(io_weyl, at, at_opt->count() > 0, m_max, from, to, samples);
    if (julia->parsed()) return run_julia(io_julia, what, depth, classify_t);
    if (oracle->parsed()) return run_oracle(io_oracle, closure, level, space, condition);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
