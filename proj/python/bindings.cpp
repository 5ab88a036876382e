#include "freemeixner/numerics.hpp"
#include "freemeixner/regression.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace freemeixner;

namespace {

// Exact values cross the boundary as rational literals ("3/4").
MeixnerParams<Rational> exact_params(const std::string& a, const std::string& b) {
    return {parse_rational(a), parse_rational(b)};
}

template <class Seq>
std::vector<std::string> strings(const Seq& s) {
    std::vector<std::string> out;
    for (const auto& v : s.values()) out.push_back(to_string(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Free Meixner laws: exact moments and cumulants, analytic transforms, regression checks";

    m.def("moments_exact", [](const std::string& a, const std::string& b, int n) {
        return strings(moments(exact_params(a, b), n));
    });
    m.def("moments_float", [](double a, double b, int n) { return moments(MeixnerParams<double>{a, b}, n).values(); });

    m.def("cumulants_exact", [](const std::string& a, const std::string& b, int n, const std::string& method) {
        return strings(cumulants(exact_params(a, b), n, parse_cumulant_method(method)));
    });
    m.def("cumulants_float", [](double a, double b, int n, const std::string& method) {
        return cumulants(MeixnerParams<double>{a, b}, n, parse_cumulant_method(method)).values();
    });
    m.def("q_cumulants_exact", [](const std::string& a, const std::string& b, const std::string& q, int n) {
        return strings(q_cumulants(parse_rational(a), parse_rational(b), parse_rational(q), n));
    });

    m.def("classify", [](const std::string& a, const std::string& b) {
        const auto d = classify_detail(exact_params(a, b));
        return std::make_pair(to_string(d.type), d.predicates);
    });

    m.def("support", [](double a, double b) {
        const Interval s = support(MeixnerParams<double>{a, b});
        return std::make_pair(s.lo, s.hi);
    });
    m.def("atoms", [](double a, double b) {
        std::vector<std::pair<double, double>> out;
        for (const auto& atom : atoms(MeixnerParams<double>{a, b})) out.emplace_back(atom.location, atom.weight);
        return out;
    });
    m.def("density", [](double a, double b, const std::vector<double>& xs) {
        const MeixnerParams<double> p{a, b};
        std::vector<double> out;
        out.reserve(xs.size());
        for (double x : xs) out.push_back(density(p, x));
        return out;
    });
    m.def("cauchy_transform", [](double a, double b, Complex z) { return cauchy_transform({a, b}, z); });
    m.def("r_transform", [](double a, double b, Complex z) { return r_transform({a, b}, z); });
    m.def("gauss_rule", [](double a, double b, int n) {
        auto rule = gauss_rule(MeixnerParams<double>{a, b}, n);
        return std::make_pair(std::move(rule.nodes), std::move(rule.weights));
    });

    m.def("verify_regression", [](const std::string& alpha, const std::string& a, const std::string& b, int n) {
        const auto spec = build_free_pair(parse_rational(alpha), exact_params(a, b), n + 2);
        py::dict out;
        for (const auto& report :
             {verify_linear_regression(spec, n), verify_quadratic_variance(spec, n), verify_mixed_cumulants(spec, n)})
            out[py::str(report.identity)] = report.passed();
        return out;
    });
}
