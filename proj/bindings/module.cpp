#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "sgspec/catalog.hpp"
#include "sgspec/decimation.hpp"
#include "sgspec/export.hpp"
#include "sgspec/graph_oracle.hpp"
#include "sgspec/julia.hpp"
#include "sgspec/verify.hpp"
#include "sgspec/weyl.hpp"

namespace py = pybind11;
using namespace sgspec;

namespace {

Sign sign_from(const std::string& s) {
  if (s == "+") return Sign::plus;
  if (s == "-") return Sign::minus;
  throw std::invalid_argument("sign must be '+' or '-'");
}

Space space_from(const std::string& s) {
  if (s == "sg") return Space::SG;
  if (s == "double-cover") return Space::DoubleCover;
  throw std::invalid_argument("space must be 'sg' or 'double-cover'");
}

Bc bc_from(const std::string& s) {
  if (s == "free") return Bc::Free;
  if (s == "neumann") return Bc::Neumann;
  if (s == "dirichlet") return Bc::Dirichlet;
  throw std::invalid_argument("condition must be 'free', 'neumann' or 'dirichlet'");
}

SuiteReport run_suite(SpectrumCatalog& cat, const std::string& suite,
                      const VerifyOptions& opt) {
  if (suite == "numerics") return verify_numerics(opt);
  if (suite == "table") return verify_table(cat, opt);
  if (suite == "lemma") return verify_lemma(cat, opt);
  if (suite == "theorem") return verify_theorem_suite(cat, opt);
  if (suite == "julia") return verify_julia(cat, opt);
  if (suite == "oracle") return verify_oracle(cat, opt);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace

PYBIND11_MODULE(_sgspec, m) {
  m.doc() = "Laplacian spectrum of the Sierpinski gasket and its double cover";
  m.attr("ALPHA") = kAlpha;

  m.def(
      "phi", [](const std::string& s, double t) { return phi(sign_from(s), t); },
      py::arg("sign"), py::arg("t"),
      "Inverse decimation branch phi_+ or phi_- of z -> z(5-z)");
  m.def(
      "phi_word", [](const std::string& w, double t) { return phi_word(word_from_string(w), t); },
      py::arg("word"), py::arg("t"),
      "Outermost-first composition of inverse branches over a '+-' word");
  m.def(
      "psi",
      [](double t, double rel_tol) {
        PsiOptions opt;
        opt.rel_tol = rel_tol;
        return psi(t, opt);
      },
      py::arg("t"), py::arg("rel_tol") = 1e-14,
      "Renormalized limit (3/2) lim 5^k phi_-^k(t)");
  m.def("pow5", &pow5d, py::arg("e"));
  m.def("scale_by_pow5", &scale_by_pow5, py::arg("t"), py::arg("n"));

  m.def(
      "primitive_eigenvalues",
      [](int family, std::int64_t count) {
        std::vector<std::tuple<double, int, std::string>> out;
        for (const auto& e : primitive_list(family, count))
          out.emplace_back(e.value, e.level, to_string(e.word()));
        return out;
      },
      py::arg("family"), py::arg("count"),
      "First `count` family members as (value, level, word) tuples");

  py::class_<SpectralLine>(m, "SpectralLine")
      .def_readonly("value", &SpectralLine::value)
      .def_readonly("mult_neumann", &SpectralLine::mult_neumann)
      .def_readonly("mult_dirichlet", &SpectralLine::mult_dirichlet)
      .def_readonly("mult_tilde", &SpectralLine::mult_tilde)
      .def_readonly("cycle", &SpectralLine::cycle)
      .def_readonly("row", &SpectralLine::row)
      .def_readonly("family", &SpectralLine::family)
      .def_readonly("rank", &SpectralLine::rank)
      .def_readonly("power", &SpectralLine::power)
      .def("label", &SpectralLine::label)
      .def("__repr__", [](const SpectralLine& s) {
        return "<SpectralLine " + s.label() + " = " + fmt17(s.value) + ">";
      });

  py::class_<CountingResult>(m, "CountingResult")
      .def_readonly("t", &CountingResult::t)
      .def_readonly("n_neumann", &CountingResult::n_neumann)
      .def_readonly("n_dirichlet", &CountingResult::n_dirichlet)
      .def_readonly("n_tilde", &CountingResult::n_tilde)
      .def_readonly("at_eigenvalue", &CountingResult::at_eigenvalue);

  py::class_<SpectrumCatalog>(m, "SpectrumCatalog")
      .def(py::init<double>(), py::arg("count_rel_tol") = 1e-9)
      .def("spectrum", &SpectrumCatalog::spectrum, py::arg("k_max"))
      .def("count", &SpectrumCatalog::count, py::arg("t"))
      .def("count_at_line", &SpectrumCatalog::count_at_line, py::arg("family"),
           py::arg("rank"), py::arg("power") = 0)
      .def("cover_count_through_row", &SpectrumCatalog::cover_count_through_row,
           py::arg("k"), py::arg("row"))
      .def(
          "difference_profile",
          [](SpectrumCatalog& cat, std::int64_t k) {
            const auto a = cat.difference_profile(k);
            return std::vector<std::int64_t>(a.begin(), a.end());
          },
          py::arg("k"))
      .def("primitive_value", &SpectrumCatalog::primitive_value, py::arg("family"),
           py::arg("rank"))
      .def("cycles_generated", &SpectrumCatalog::cycles_generated);

  py::enum_<IntervalKind>(m, "IntervalKind")
      .value("A", IntervalKind::A)
      .value("A_PRIME", IntervalKind::APrime);

  py::class_<WeylInterval>(m, "WeylInterval")
      .def_readonly("kind", &WeylInterval::kind)
      .def_readonly("ell", &WeylInterval::ell)
      .def_readonly("scale_n", &WeylInterval::scale_n)
      .def_readonly("lo", &WeylInterval::lo)
      .def_readonly("hi", &WeylInterval::hi)
      .def_readonly("g_coefficient", &WeylInterval::g_coefficient)
      .def_readonly("g1_value", &WeylInterval::g1_value)
      .def_readonly("m0", &WeylInterval::m0);

  py::class_<LocateResult>(m, "LocateResult")
      .def_readonly("located", &LocateResult::located)
      .def_readonly("kind", &LocateResult::kind)
      .def_readonly("ell", &LocateResult::ell)
      .def_readonly("scale_n", &LocateResult::scale_n)
      .def_readonly("t", &LocateResult::t)
      .def_readonly("t_hat", &LocateResult::t_hat);

  py::class_<GValues>(m, "GValues")
      .def_readonly("G", &GValues::G)
      .def_readonly("g1", &GValues::g1)
      .def_readonly("interval", &GValues::interval);

  py::class_<TheoremCheckLine>(m, "TheoremCheckLine")
      .def_readonly("m", &TheoremCheckLine::m)
      .def_readonly("lhs_tilde", &TheoremCheckLine::lhs_tilde)
      .def_readonly("rhs_tilde", &TheoremCheckLine::rhs_tilde)
      .def_readonly("n_neumann", &TheoremCheckLine::n_neumann)
      .def_readonly("n_dirichlet", &TheoremCheckLine::n_dirichlet)
      .def_readonly("passed", &TheoremCheckLine::pass);

  py::class_<TheoremReport>(m, "TheoremReport")
      .def_readonly("where", &TheoremReport::where)
      .def_readonly("interval", &TheoremReport::interval)
      .def_readonly("checks", &TheoremReport::checks)
      .def_readonly("passed", &TheoremReport::pass);

  m.def(
      "base_intervals",
      [](std::int64_t ell, SpectrumCatalog& cat) { return base_intervals(ell, cat); },
      py::arg("ell"), py::arg("catalog"),
      "The two eigenvalue-free intervals flanking 5^2 lam(3, ell)");
  m.def("locate", &locate, py::arg("t"), py::arg("catalog"), py::arg("ell_max") = 1024);
  m.def("interval_at", &interval_at, py::arg("location"), py::arg("catalog"));
  m.def("weyl_G", &weyl_G, py::arg("t"), py::arg("catalog"), py::arg("ell_max") = 1024);
  m.def("verify_theorem", &verify_theorem, py::arg("t"), py::arg("m_max"),
        py::arg("catalog"), py::arg("ell_max") = 1024);

  m.def(
      "b_interval",
      [](std::uint64_t heap_index) {
        const auto b = b_interval(heap_index);
        return std::make_pair(b.lo, b.hi);
      },
      py::arg("heap_index"), "Gap interval in heap order; index 1 is the base gap");
  m.def("b_total_length", &b_total_length, py::arg("depth"));
  m.def(
      "cover",
      [](int m) {
        std::vector<std::tuple<std::string, double, double>> out;
        for (const auto& c : cover(m)) out.emplace_back(to_string(c.word), c.lo, c.hi);
        return out;
      },
      py::arg("m"), "All 2^m cover intervals as (word, lo, hi), sorted by position");
  m.def("cover_measure", &cover_measure, py::arg("m"));

  py::class_<ClassifyResult>(m, "ClassifyResult")
      .def_readonly("in_gap", &ClassifyResult::in_gap)
      .def_readonly("heap_index", &ClassifyResult::heap_index)
      .def_readonly("generation", &ClassifyResult::generation)
      .def_property_readonly("gap_lo", [](const ClassifyResult& r) { return r.gap.lo; })
      .def_property_readonly("gap_hi", [](const ClassifyResult& r) { return r.gap.hi; });
  m.def("classify", &classify, py::arg("t"), py::arg("depth"));

  m.def(
      "graph_spectrum",
      [](int level, const std::string& space, const std::string& condition) {
        const auto g = build_gamma(level, space_from(space));
        const auto s = graph_spectrum(g, bc_from(condition));
        std::vector<std::pair<double, int>> groups;
        for (const auto& grp : s.groups) groups.emplace_back(grp.value, grp.multiplicity);
        return std::make_tuple(s.raw, groups, s.max_residual);
      },
      py::arg("level"), py::arg("space") = "double-cover", py::arg("condition") = "free",
      "Dense graph-Laplacian spectrum: (raw, grouped (value, mult), max residual)");
  m.def(
      "closure_report_json",
      [](int m_max) { return closure_report_json(decimation_closure_report(m_max)).dump(); },
      py::arg("m_max"),
      "Decimation-closure report for levels 1..m_max as a JSON string");
  m.def("fractal_limit_estimate", &fractal_limit_estimate, py::arg("first_level"),
        py::arg("mu"));

  py::class_<VerifyOptions>(m, "VerifyOptions")
      .def(py::init<>())
      .def_readwrite("table_k_max", &VerifyOptions::table_k_max)
      .def_readwrite("lemma_n_max", &VerifyOptions::lemma_n_max)
      .def_readwrite("lemma_j_max", &VerifyOptions::lemma_j_max)
      .def_readwrite("theorem_ell_max", &VerifyOptions::theorem_ell_max)
      .def_readwrite("theorem_m_max", &VerifyOptions::theorem_m_max)
      .def_readwrite("theorem_scale_lo", &VerifyOptions::theorem_scale_lo)
      .def_readwrite("theorem_scale_hi", &VerifyOptions::theorem_scale_hi)
      .def_readwrite("julia_exhaustion_depth", &VerifyOptions::julia_exhaustion_depth)
      .def_readwrite("julia_measure_depth", &VerifyOptions::julia_measure_depth)
      .def_readwrite("julia_ell_max", &VerifyOptions::julia_ell_max)
      .def_readwrite("oracle_level_max", &VerifyOptions::oracle_level_max);

  m.def(
      "verify_suite",
      [](SpectrumCatalog& cat, const std::string& suite, const VerifyOptions& opt) {
        const auto rep = run_suite(cat, suite, opt);
        std::vector<std::tuple<std::string, bool, std::string>> checks;
        for (const auto& c : rep.checks) checks.emplace_back(c.name, c.pass, c.detail);
        return std::make_pair(rep.pass, checks);
      },
      py::arg("catalog"), py::arg("suite"), py::arg("options") = VerifyOptions{},
      "Run one verification suite; returns (pass, [(check, pass, detail), ...])");
}
