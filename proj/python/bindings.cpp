#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "explicit_lab/cli.hpp"
#include "explicit_lab/error.hpp"
#include "explicit_lab/explicit_formula.hpp"
#include "explicit_lab/measures.hpp"
#include "explicit_lab/number_theory.hpp"
#include "explicit_lab/report.hpp"
#include "explicit_lab/special_functions.hpp"
#include "explicit_lab/test_functions.hpp"
#include "explicit_lab/zeros.hpp"

namespace py = pybind11;
using namespace explicit_lab;

namespace {

py::dict to_dict(const Record& r) {
    py::dict d;
    for (const auto& [key, value] : r.fields())
        std::visit([&](const auto& v) { d[py::str(key)] = v; }, value);
    return d;
}

template <class T>
py::dict report_dict(const T& r) {
    return to_dict(to_record(r));
}

py::tuple eval_pair(const EvalWithError<Complex>& e) {
    return py::make_tuple(e.value, e.err_bound);
}

Side parse_side(const std::string& s) {
    if (s == "time") return Side::time;
    if (s == "freq") return Side::freq;
    throw DomainError("side must be 'time' or 'freq'");
}

ProbeMode parse_mode(const std::string& s) {
    if (s == "auto") return ProbeMode::automatic;
    if (s == "plain") return ProbeMode::plain;
    if (s == "head") return ProbeMode::head_subtracted;
    throw DomainError("mode must be 'auto', 'plain' or 'head'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Core numerics of explicit_lab";
    m.attr("__version__") = "0.1.0";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<OrderError>(m, "OrderError", base.ptr());
    py::register_exception<AdmissibilityError>(m, "AdmissibilityError", base.ptr());
    py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
    py::register_exception<RangeError>(m, "RangeError", base.ptr());
    py::register_exception<CoverageError>(m, "CoverageError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
    py::register_exception<AccuracyError>(m, "AccuracyError", base.ptr());
    py::register_exception<IllConditionedError>(m, "IllConditionedError", base.ptr());

    py::class_<MangoldtTable>(m, "MangoldtTable")
        .def_property_readonly("limit", &MangoldtTable::limit)
        .def("lambda_", &MangoldtTable::lambda, py::arg("n"))
        .def("smallest_prime_factor", &MangoldtTable::smallest_prime_factor, py::arg("n"))
        .def("count_upto", &MangoldtTable::count_upto, py::arg("x"))
        .def("prime_powers", [](const MangoldtTable& t) {
            std::vector<std::uint32_t> out;
            out.reserve(t.prime_powers().size());
            for (const auto& pp : t.prime_powers()) out.push_back(pp.n);
            return out;
        })
        .def("psi", [](const MangoldtTable& t, double x) { return chebyshev_psi(x, t); }, py::arg("x"))
        .def("weighted_psum", [](const MangoldtTable& t, double x) { return weighted_psum(x, t); }, py::arg("x"))
        .def("__len__", [](const MangoldtTable& t) { return t.prime_powers().size(); });

    m.def("sieve", [](std::uint64_t limit) {
        py::gil_scoped_release unlock;
        return sieve_lambda(limit);
    }, py::arg("limit"));
    m.def("alpha", [](double x, const MangoldtTable& t) { return alpha(x, t); }, py::arg("x"), py::arg("table"));
    m.def("lemma_error_profile", [](const std::vector<double>& xs, const MangoldtTable& t) {
        const auto p = lemma_error_profile(xs, t);
        py::dict d;
        d["checkpoints"] = p.checkpoints;
        d["sums"] = p.sums;
        d["errors"] = p.errors;
        d["ratios"] = p.ratios;
        d["sup_abs_ratio"] = p.sup_abs_ratio;
        d["within_log_cube"] = p.within_log_cube;
        return d;
    }, py::arg("checkpoints"), py::arg("table"));

    m.def("log_gamma", &log_gamma, py::arg("z"));
    m.def("digamma", &digamma, py::arg("z"));
    m.def("theta", &riemann_siegel_theta, py::arg("t"));
    m.def("theta_prime", &theta_prime, py::arg("t"));
    m.def("zeta", [](Complex s) { return eval_pair(zeta_em(s)); }, py::arg("s"));
    m.def("zeta_prime", [](Complex s) { return eval_pair(zeta_prime_em(s)); }, py::arg("s"));
    m.def("zeta_logderiv", [](Complex s) { return eval_pair(zeta_logderiv(s)); }, py::arg("s"));
    m.def("rs_z", &rs_z, py::arg("t"));

    py::class_<ZeroTable>(m, "ZeroTable")
        .def(py::init<std::vector<double>, std::string>(), py::arg("ordinates"), py::arg("source") = "")
        .def_property_readonly("ordinates", [](const ZeroTable& z) {
            return std::vector<double>(z.ordinates().begin(), z.ordinates().end());
        })
        .def_property_readonly("height_limit", &ZeroTable::height_limit)
        .def_property_readonly("source", &ZeroTable::source)
        .def("count_upto", &ZeroTable::count_upto, py::arg("t"))
        .def("without", &ZeroTable::without, py::arg("index"))
        .def("prefix", &ZeroTable::prefix, py::arg("count"))
        .def("__len__", &ZeroTable::size)
        .def("__eq__", [](const ZeroTable& a, const ZeroTable& b) { return a == b; });

    m.def("load_zeros", &load_zeros, py::arg("path"));
    m.def("ingest_zeros_text", [](const std::string& text, const std::string& source) {
        return ingest_zeros_text(text, source);
    }, py::arg("text"), py::arg("source") = "");
    m.def("serialize_zeros", [](const ZeroTable& z) { return serialize_zeros(z); }, py::arg("table"));
    m.def("counting_check", [](const ZeroTable& z, std::size_t samples) {
        return report_dict(counting_check(z, samples));
    }, py::arg("table"), py::arg("samples") = 100);
    m.def("find_zeros", [](double lo, double hi, double step) {
        FindZerosOptions o;
        o.step = step;
        py::gil_scoped_release unlock;
        return find_zeros(lo, hi, o);
    }, py::arg("t_min"), py::arg("t_max"), py::arg("step") = 0.05);

    py::class_<TestFunction>(m, "TestFunction")
        .def("time_value", &TestFunction::time_value, py::arg("t"))
        .def("freq_value", &TestFunction::freq_value, py::arg("x"))
        .def("freq_value_complex", &TestFunction::freq_value_complex, py::arg("x"))
        .def_property_readonly("parity", [](const TestFunction& f) { return std::string(to_string(f.parity())); })
        .def_property_readonly("real_transform", &TestFunction::real_transform)
        .def("spec", &TestFunction::spec)
        .def("__repr__", [](const TestFunction& f) { return "TestFunction('" + f.spec() + "')"; });

    m.def("dilated_gaussian", &dilated_gaussian, py::arg("a"));
    m.def("gaussian_pair", &gaussian_pair, py::arg("x0"), py::arg("beta"));
    m.def("hermite_combo", &hermite_combo, py::arg("coefficients"));
    m.def("parse_test_function", [](const std::string& s) { return parse_test_function(s); }, py::arg("spec"));
    m.def("hermite_fn", &hermite_fn, py::arg("n"), py::arg("x"));
    m.def("fourier_quadrature", [](const TestFunction& f, double xi) {
        const auto r = fourier_quadrature(f, xi);
        return py::make_tuple(r.value, r.err_bound);
    }, py::arg("fn"), py::arg("xi"));

    py::class_<SignedMeasure>(m, "Measure")
        .def_property_readonly("name", &SignedMeasure::name)
        .def_property_readonly("coverage", &SignedMeasure::coverage)
        .def_property_readonly("even", &SignedMeasure::even)
        .def("atoms", [](const SignedMeasure& mu) {
            std::vector<std::pair<double, double>> out;
            out.reserve(mu.atoms().size());
            for (const auto& a : mu.atoms()) out.emplace_back(a.position, a.weight);
            return out;
        });

    m.def("mu_prime_side", &mu_prime_side, py::arg("table"), py::arg("max_n") = 0);
    m.def("nu_zero_side", &nu_zero_side, py::arg("zeros"));
    m.def("dirac_comb", &dirac_comb, py::arg("n_max"));
    m.def("pair", [](const SignedMeasure& mu, const TestFunction& f, const std::string& side) {
        return report_dict(pair(mu, f, parse_side(side)));
    }, py::arg("measure"), py::arg("fn"), py::arg("side") = "time");
    m.def("growth_profile", [](const SignedMeasure& mu, const std::vector<double>& xs) {
        std::vector<double> out;
        for (const auto& g : growth_profile(mu, xs)) out.push_back(g.net_mass);
        return out;
    }, py::arg("measure"), py::arg("xs"));

    m.def("verify_pair", [](const TestFunction& f, const ZeroTable& z, const MangoldtTable& p, double tol) {
        py::gil_scoped_release unlock;
        const auto r = verify_pair(f, z, p, tol);
        py::gil_scoped_acquire lock;
        return report_dict(r);
    }, py::arg("fn"), py::arg("zeros"), py::arg("primes"), py::arg("tol") = 1e-6);
    m.def("probe", [](Complex s, const MangoldtTable& p, const std::string& mode) {
        return report_dict(probe(s, p, parse_mode(mode)));
    }, py::arg("s"), py::arg("primes"), py::arg("mode") = "auto");
    m.def("probe_series", [](Complex s, int k_max) {
        const auto r = probe_series(s, k_max);
        py::dict d;
        d["value"] = r.value;
        d["alternating"] = r.alternating;
        d["closed_form"] = r.closed_form;
        d["k_used"] = r.k_used;
        d["tail_bound"] = r.tail_bound;
        return d;
    }, py::arg("s"), py::arg("k_max") = -1);
    m.def("probe_closed_form", &probe_closed_form, py::arg("s"));
    m.def("pole_cancellation", [](double radius, int samples) {
        return report_dict(pole_cancellation(radius, samples));
    }, py::arg("radius") = 0.1, py::arg("samples") = 256);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release unlock;
            code = explicit_lab::cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
