#include "freemeixner/meixner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace freemeixner {

namespace {

constexpr double kAtomWeightFloor = 1e-12;
constexpr double kBranchMargin = 1e-6;

double quadratic(const MeixnerParams<double>& p, double x) { return (p.b * x + p.a) * x + 1.0; }

// sqrt((z - a)^2 - R^2) with the branch that behaves like z - a at infinity.
Complex outer_sqrt(const MeixnerParams<double>& p, Complex z) {
    const double radius = 2.0 * std::sqrt(1.0 + p.b);
    return std::sqrt(z - p.a - radius) * std::sqrt(z - p.a + radius);
}

// Real-axis value of outer_sqrt outside the open support: carries the sign of x - a.
double outer_sqrt_real(const MeixnerParams<double>& p, double x) {
    const double radius = 2.0 * std::sqrt(1.0 + p.b);
    const double d = x - p.a;
    const double prod = (std::fabs(d) - radius) * (std::fabs(d) + radius);
    return std::copysign(std::sqrt(std::max(prod, 0.0)), d);
}

// Real roots of b x^2 + a x + 1, computed without cancellation.
std::vector<double> quadratic_roots(const MeixnerParams<double>& p, bool& double_root) {
    double_root = false;
    if (p.b == 0.0) {
        if (p.a == 0.0) return {};
        return {-1.0 / p.a};
    }
    const double disc = p.a * p.a - 4.0 * p.b;
    const double scale = std::max({p.a * p.a, 4.0 * std::fabs(p.b), 1e-300});
    if (std::fabs(disc) <= 1e-14 * scale) {
        double_root = true;
        return {-p.a / (2.0 * p.b)};
    }
    if (disc < 0.0) return {};
    const double q = -0.5 * (p.a + std::copysign(std::sqrt(disc), p.a == 0.0 ? 1.0 : p.a));
    std::vector<double> roots{q / p.b, 1.0 / q};
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

std::string to_string(MeixnerType type) {
    switch (type) {
        case MeixnerType::Semicircle: return "Semicircle";
        case MeixnerType::FreePoisson: return "FreePoisson";
        case MeixnerType::FreePascal: return "FreePascal";
        case MeixnerType::FreeGamma: return "FreeGamma";
        case MeixnerType::PureFreeMeixner: return "PureFreeMeixner";
        case MeixnerType::FreeBinomial: return "FreeBinomial";
    }
    return "?";
}

std::string to_string(CumulantMethod method) {
    switch (method) {
        case CumulantMethod::nc_le2: return "nc_le2";
        case CumulantMethod::semicircle: return "semicircle";
        case CumulantMethod::from_moments: return "from_moments";
    }
    return "?";
}

CumulantMethod parse_cumulant_method(std::string_view name) {
    if (name == "nc_le2") return CumulantMethod::nc_le2;
    if (name == "semicircle") return CumulantMethod::semicircle;
    if (name == "from_moments") return CumulantMethod::from_moments;
    throw DomainError("unknown cumulant method '" + std::string(name) + "' (expected nc_le2, semicircle, from_moments)");
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x < 0) return std::nullopt;
    using boost::multiprecision::mpz_int;
    const mpz_int num = boost::multiprecision::numerator(x);
    const mpz_int den = boost::multiprecision::denominator(x);
    const mpz_int rn = boost::multiprecision::sqrt(num);
    const mpz_int rd = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

Interval support(const MeixnerParams<double>& p) {
    p.validate();
    const double radius = 2.0 * std::sqrt(1.0 + p.b);
    return {p.a - radius, p.a + radius};
}

double density(const MeixnerParams<double>& p, double x) {
    const Interval s = support(p);
    if (!s.contains_open(x)) return 0.0;
    const double q = quadratic(p, x);
    if (std::fabs(q) < 1e-300) throw DomainError("density: b x^2 + a x + 1 vanishes inside the support");
    const double radial = (x - s.lo) * (s.hi - x);
    return std::sqrt(radial) / (2.0 * std::numbers::pi * q);
}

std::vector<Atom> atoms(const MeixnerParams<double>& p) {
    const Interval s = support(p);
    bool double_root = false;
    const auto roots = quadratic_roots(p, double_root);
    std::vector<Atom> out;
    // At a double root the rationalized form 2(1+b) / ((1+2b)z + a + sqrt) stays finite: no mass.
    if (double_root) return out;
    for (double x0 : roots) {
        if (s.contains_open(x0)) continue;
        const double numerator = (1.0 + 2.0 * p.b) * x0 + p.a - outer_sqrt_real(p, x0);
        const double derivative = 2.0 * p.b * x0 + p.a;
        const double weight = numerator / (2.0 * derivative);
        if (weight > kAtomWeightFloor) out.push_back({x0, weight});
    }
    std::sort(out.begin(), out.end(), [](const Atom& x, const Atom& y) { return x.location < y.location; });
    return out;
}

MeixnerLaw make_law(const MeixnerParams<double>& p) { return {p, support(p), atoms(p)}; }

Complex cauchy_transform(const MeixnerParams<double>& p, Complex z) {
    const Interval s = support(p);
    if (z.imag() == 0.0) {
        const double x = z.real();
        if (s.contains_open(x))
            throw DomainError("cauchy_transform: z = " + to_string(x) + " lies on the support");
        for (const Atom& atom : atoms(p))
            if (std::fabs(x - atom.location) <= 1e-12 * (1.0 + std::fabs(atom.location)))
                throw DomainError("cauchy_transform: z = " + to_string(x) + " is an atom (pole of G)");
    }
    const Complex root = outer_sqrt(p, z);
    const Complex base = (1.0 + 2.0 * p.b) * z + p.a;
    const Complex minus = base - root;
    const Complex plus = base + root;
    // minus * plus = 4 (1 + b) (b z^2 + a z + 1); use whichever form avoids cancellation.
    if (p.b > -1.0 && std::abs(plus) >= std::abs(minus)) return 2.0 * (1.0 + p.b) / plus;
    return minus / (2.0 * ((p.b * z + p.a) * z + 1.0));
}

Complex r_transform(const MeixnerParams<double>& p, Complex z) {
    p.validate();
    // (1 - a z)^2 - 4 b z^2 = (1 - c1 z)(1 - c2 z), c = a +- 2 sqrt(b).
    const Complex sb = std::sqrt(Complex(p.b, 0.0));
    const Complex c1 = p.a + 2.0 * sb;
    const Complex c2 = p.a - 2.0 * sb;
    const double reach = std::max(std::abs(c1), std::abs(c2));
    if (std::abs(z) * reach > 1.0 - kBranchMargin)
        throw DomainError("r_transform: |z| = " + to_string(std::abs(z)) + " too close to the branch point at radius " +
                          to_string(1.0 / reach));
    const Complex root = std::sqrt(1.0 - c1 * z) * std::sqrt(1.0 - c2 * z);
    return 2.0 * z / (1.0 - p.a * z + root);
}

double series_radius(const MeixnerParams<double>& p) {
    return 0.2 / (1.0 + std::fabs(p.a) + std::sqrt(1.0 + std::fabs(p.b)));
}

Complex moment_generating(const MeixnerParams<double>& p, Complex z, int order, SeriesGuard guard) {
    if (guard == SeriesGuard::enforce && std::abs(z) > series_radius(p))
        throw DomainError("moment_generating: |z| = " + to_string(std::abs(z)) + " exceeds series radius " +
                          to_string(series_radius(p)));
    const auto m = moments(p, order);
    Complex acc = 0.0;
    for (int n = order; n >= 0; --n) acc = acc * z + m[n];
    return acc;
}

Complex moment_generating_residual(const MeixnerParams<double>& p, Complex z, Complex m) {
    return (z * z + p.a * z + p.b) * m * m - (1.0 + p.a * z + 2.0 * p.b) * m + 1.0 + p.b;
}

Complex r_transform_residual(const MeixnerParams<double>& p, Complex z, Complex r) {
    return z * p.b * r * r - (1.0 - p.a * z) * r + z;
}

JacobiCoefficients jacobi_coefficients(const MeixnerParams<double>& p, int n) {
    p.validate();
    if (n < 1) throw DomainError("Jacobi matrix size must be >= 1");
    JacobiCoefficients j;
    j.diagonal.assign(n, p.a);
    j.diagonal[0] = 0.0;
    if (n > 1) {
        j.offdiagonal.assign(n - 1, std::sqrt(1.0 + p.b));
        j.offdiagonal[0] = 1.0;
    }
    return j;
}

Complex levy_r_transform(const LevyParams<double>& l, double t, Complex z) {
    l.validate();
    if (!(t > 0.0)) throw DomainError("Levy time t must be > 0");
    const double rs = std::sqrt(l.sigma);
    const double c1 = l.eta + 2.0 * rs;
    const double c2 = l.eta - 2.0 * rs;
    const double reach = std::max(std::fabs(c1), std::fabs(c2));
    if (std::abs(z) * reach > 1.0 - kBranchMargin)
        throw DomainError("levy_r_transform: z too close to the branch point");
    const Complex root = std::sqrt(1.0 - c1 * z) * std::sqrt(1.0 - c2 * z);
    return 2.0 * z * t / (1.0 - l.eta * z + root);
}

}  // namespace freemeixner
