#include "freemeixner/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>

namespace freemeixner {

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
}

QuadratureRule gauss_rule(const MeixnerParams<double>& p, int n) {
    p.validate();
    if (n < 1) throw DomainError("gauss_rule needs n >= 1");
    // Solved in extended precision and rounded once: node and weight errors
    // otherwise get amplified by |x|^k in high moments.
    using Real = long double;
    using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
    using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
    const Real coupling = std::sqrt(Real(1) + Real(p.b));
    // b = -1 makes every off-diagonal after the first vanish: a two-point law.
    const int size = coupling == Real(0) ? std::min(n, 2) : n;

    Vector diag = Vector::Constant(size, Real(p.a));
    diag[0] = 0;
    Vector sub = Vector::Constant(std::max(size - 1, 0), coupling);
    if (size > 1) sub[0] = 1;

    Eigen::SelfAdjointEigenSolver<Matrix> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw NumericError("gauss_rule: tridiagonal eigensolver did not converge", 0.0);

    QuadratureRule rule;
    rule.nodes.resize(size);
    rule.weights.resize(size);
    for (int k = 0; k < size; ++k) {
        rule.nodes[k] = static_cast<double>(solver.eigenvalues()[k]);
        const Real v = solver.eigenvectors()(0, k);
        rule.weights[k] = static_cast<double>(v * v);
    }
    return rule;
}

namespace {

using Legendre = boost::math::quadrature::gauss<double, 10>;

// Composite Gauss-Legendre over [0, pi] split into `panels` equal pieces.
double composite(const std::function<double(double)>& g, int panels) {
    const auto& abscissa = Legendre::abscissa();
    const auto& weights = Legendre::weights();
    const double h = std::numbers::pi / panels;
    double total = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double mid = (k + 0.5) * h;
        const double half = 0.5 * h;
        double acc = 0.0;
        for (std::size_t i = 0; i < abscissa.size(); ++i) {
            if (abscissa[i] == 0.0) {
                acc += weights[i] * g(mid);
            } else {
                acc += weights[i] * (g(mid - half * abscissa[i]) + g(mid + half * abscissa[i]));
            }
        }
        total += half * acc;
    }
    return total;
}

IntegrationResult integrate_continuous(const MeixnerLaw& law, const std::function<double(double)>& f, int panels,
                                       double tolerance) {
    const auto& p = law.params;
    const double radius = 0.5 * law.support.width();
    if (radius <= 0.0) return {0.0, 0.0, 0};
    const double center = 0.5 * (law.support.lo + law.support.hi);
    // density(x) dx = radius^2 sin^2(theta) / (2 pi q(x)) dtheta
    auto integrand = [&](double theta) {
        const double x = center + radius * std::cos(theta);
        const double s = std::sin(theta);
        const double q = (p.b * x + p.a) * x + 1.0;
        return f(x) * radius * radius * s * s / (2.0 * std::numbers::pi * q);
    };
    panels = std::max(panels, 1);
    double coarse = composite(integrand, panels);
    while (true) {
        const int finer_panels = panels * 2;
        const double fine = composite(integrand, finer_panels);
        const double err = std::fabs(fine - coarse);
        if (err <= tolerance) return {fine, err, finer_panels};
        if (finer_panels >= kMaxPanels)
            throw NumericError("integrate_against_law: no convergence after " + std::to_string(finer_panels) +
                                   " panels (error estimate " + to_string(err) + ")",
                               fine);
        coarse = fine;
        panels = finer_panels;
    }
}

}  // namespace

IntegrationResult integrate_against_law(const MeixnerLaw& law, const std::function<double(double)>& f, int panels,
                                        double tolerance) {
    IntegrationResult result = integrate_continuous(law, f, panels, tolerance);
    for (const Atom& atom : law.atoms) result.value += atom.weight * f(atom.location);
    return result;
}

double continuous_mass(const MeixnerLaw& law) {
    return integrate_continuous(law, [](double) { return 1.0; }, 8, kIntegrationTolerance).value;
}

double stieltjes_invert(const MeixnerParams<double>& p, double x, double eps) {
    if (!(eps > 0.0)) throw DomainError("stieltjes_invert: eps must be > 0");
    return -cauchy_transform(p, Complex(x, eps)).imag() / std::numbers::pi;
}

}  // namespace freemeixner
