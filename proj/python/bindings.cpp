#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rock/abacus.hpp"
#include "rock/errors.hpp"
#include "rock/graded_dim.hpp"
#include "rock/verify.hpp"

namespace py = pybind11;
using namespace rock;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Partition partition_of(const std::vector<int>& parts) { return Partition(parts); }

json dims_json(const GradedDim& g) {
    json contrib = json::array();
    for (const auto& [mu, v] : g.contributions) contrib.push_back({{"mu", mu.parts()}, {"value", to_json(v)}});
    return {{"value", to_json(g.value)}, {"contributions", contrib}};
}

json core_json(const RouquierCore& c) {
    return {{"rho", c.rho.parts()}, {"e", c.e}, {"d", c.d}, {"kappa", c.kappa}, {"N", c.N}, {"runner_counts", c.runner_counts}};
}

py::object core_quotient(const std::vector<int>& parts, int e, std::optional<int> N) {
    Partition lam = partition_of(parts);
    auto r = core_quotient_weight(lam, N.value_or(lam.length()), e);
    json q = json::array();
    for (const auto& p : r.quotient.components) q.push_back(p.parts());
    return to_py({{"core", r.core.parts()}, {"quotient", q}, {"weight", r.weight}});
}

py::object rouquier(const std::vector<int>& rho, int d, int e) {
    auto c = is_rouquier_core(partition_of(rho), d, e);
    if (!c) return py::none();
    return to_py(core_json(*c));
}

py::object cyclotomic_dim(const std::string& i, const std::string& j, int e) {
    return to_py(dims_json(cyclotomic_graded_dim(DividedPowerWord::parse(i), DividedPowerWord::parse(j), e)));
}

py::object rock_dim(int e, int d, const std::vector<int>& lam, const std::vector<int>& colors, const std::vector<int>& lam2,
                    const std::vector<int>& colors2, std::optional<std::vector<int>> rho, const std::string& lj) {
    RouquierCore core;
    if (rho) {
        auto c = is_rouquier_core(partition_of(*rho), d, e);
        if (!c) throw DomainError("not a " + std::to_string(d) + "-Rouquier core");
        core = *c;
    } else {
        core = make_rouquier_core(e, d);
    }
    if (lj != "reversed" && lj != "canonical") throw PreconditionError("lj must be canonical or reversed");
    LjChoice choice = lj == "reversed" ? LjChoice::reversed(e) : LjChoice::canonical(e);
    auto g = rock_truncation_dim(core, ColoredComposition(Composition{lam}, colors, e), ColoredComposition(Composition{lam2}, colors2, e),
                                 choice);
    return to_py(dims_json(g));
}

py::object verify(const std::string& suite, int e, int d, int n, std::uint64_t seed, std::optional<int> samples) {
    auto s = [&](int dflt) { return samples.value_or(dflt); };
    SuiteReport r;
    if (suite == "zigzag") r = verify_zigzag(e);
    else if (suite == "wreath") r = verify_wreath(e, d, s(50), seed);
    else if (suite == "tableaux") r = verify_tableaux(e, 9);
    else if (suite == "words") r = verify_words(e, d);
    else if (suite == "rock-d1") r = verify_rock_d1(e);
    else if (suite == "abacus") r = verify_abacus(e, d);
    else if (suite == "counting") r = verify_counting(e, d, n, s(30), seed);
    else if (suite == "schur") r = verify_schur(n, d, e, s(50), seed);
    else if (suite == "double") r = verify_double(n, d, e, s(200), seed);
    else throw PreconditionError("unknown suite " + suite);
    json checks = json::array();
    for (const auto& c : r.checks) {
        json x = {{"check", c.name}, {"passed", c.passed}};
        if (!c.passed) x["counterexample"] = c.counterexample;
        checks.push_back(x);
    }
    return to_py({{"suite", r.suite}, {"passed", r.passed()}, {"results", r.results}, {"verdicts", checks}});
}

py::object ranks(int n, int d, int e) {
    auto r = rank_report(n, d, e);
    return to_py({{"schur", to_json(r.schur)},
                  {"t", to_json(r.t)},
                  {"double", to_json(r.dbl)},
                  {"degree_zero", r.degree_zero},
                  {"degree_zero_formula", r.degree_zero_formula},
                  {"simples", r.simples},
                  {"order_independent", r.order_independent},
                  {"closed", r.closed}});
}

}  // namespace

PYBIND11_MODULE(rockblock, m) {
    m.doc() = "RoCK blocks, zigzag Schur algebras and Turner doubles";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.def("core_quotient", &core_quotient, py::arg("partition"), py::arg("e"), py::arg("N") = py::none());
    m.def("is_core", [](const std::vector<int>& p, int e) { return is_core(partition_of(p), e); }, py::arg("partition"), py::arg("e"));
    m.def("rouquier_core", &rouquier, py::arg("rho"), py::arg("d"), py::arg("e"), "witness data, or None when rho is not d-Rouquier");
    m.def("make_rouquier_core", [](int e, int d) { return to_py(core_json(make_rouquier_core(e, d))); }, py::arg("e"), py::arg("d"));
    m.def("cyclotomic_dim", &cyclotomic_dim, py::arg("i"), py::arg("j"), py::arg("e"));
    m.def("rock_dim", &rock_dim, py::arg("e"), py::arg("d"), py::arg("lam"), py::arg("colors"), py::arg("lam2"), py::arg("colors2"),
          py::arg("rho") = py::none(), py::arg("lj") = "canonical");
    m.def("module_dim", [](int e, const std::vector<int>& lam, const std::vector<int>& colors) {
        return closed_form_module_dim(ColoredComposition(Composition{lam}, colors, e), e);
    }, py::arg("e"), py::arg("lam"), py::arg("colors"));
    m.def("verify", &verify, py::arg("suite"), py::arg("e"), py::arg("d") = 1, py::arg("n") = 1, py::arg("seed") = 0,
          py::arg("samples") = py::none());
    m.def("rank_report", &ranks, py::arg("n"), py::arg("d"), py::arg("e"));
    m.def("simple_count", [](int e, int d) {
        auto s = simple_count(e, d);
        return to_py({{"pj", s.pj}, {"pi", s.pi}, {"block", s.block}, {"regular", s.regular}});
    }, py::arg("e"), py::arg("d"));
}
