#pragma once

// The free Meixner family mu_{a,b}: standardized laws (mean 0, variance 1)
// whose monic orthogonal polynomials have constant recursion coefficients
// (a, 1 + b) after the first step.

#include "freemeixner/cumulants.hpp"
#include "freemeixner/errors.hpp"
#include "freemeixner/ncpart.hpp"
#include "freemeixner/scalar.hpp"
#include "freemeixner/sequences.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freemeixner {

using Complex = std::complex<double>;

template <Scalar T>
struct MeixnerParams {
    T a{0};
    T b{0};

    /// Throws DomainError unless b >= -1.
    void validate() const {
        if (b < T(-1)) throw DomainError("free Meixner parameter b = " + to_string(b) + " must satisfy b >= -1");
    }

    MeixnerParams<double> to_double() const { return {freemeixner::to_double(a), freemeixner::to_double(b)}; }
};

struct Atom {
    double location;
    double weight;
};

struct Interval {
    double lo;
    double hi;

    double width() const noexcept { return hi - lo; }
    bool contains_open(double x) const noexcept { return lo < x && x < hi; }
};

/// Immutable description of the measure mu_{a,b}.
struct MeixnerLaw {
    MeixnerParams<double> params;
    Interval support;
    std::vector<Atom> atoms;
};

/// Semicircle law with given mean and variance (variance 0 is the point mass).
template <Scalar T>
struct SemicircleParams {
    T mean{0};
    T variance{1};
};

/// Free Levy process with quadratic conditional variances.
template <Scalar T>
struct LevyParams {
    T eta{0};
    T sigma{0};

    void validate() const {
        if (sigma < T(0)) throw DomainError("Levy parameter sigma = " + to_string(sigma) + " must be >= 0");
    }
};

enum class MeixnerType { Semicircle, FreePoisson, FreePascal, FreeGamma, PureFreeMeixner, FreeBinomial };

std::string to_string(MeixnerType type);

enum class CumulantMethod { nc_le2, semicircle, from_moments };

std::string to_string(CumulantMethod method);
/// Accepts "nc_le2", "semicircle", "from_moments". Throws DomainError.
CumulantMethod parse_cumulant_method(std::string_view name);

// ---------------------------------------------------------------------------
// Exact (templated) routes

template <Scalar T>
T catalan_number(int k) {
    // C_k = prod_{j=2}^{k} (k + j) / j
    T c(1);
    for (int j = 2; j <= k; ++j) c = c * T(k + j) / T(j);
    return c;
}

template <Scalar T>
T binomial_coefficient(int n, int k) {
    if (k < 0 || k > n) return T(0);
    T c(1);
    for (int j = 1; j <= k; ++j) c = c * T(n - k + j) / T(j);
    return c;
}

/// m_0..m_N from the moment recursion
///   m_{n+2} = sum_{j=0}^{n} m_j m_{n-j} + a sum_{j=0}^{n} m_j m_{n+1-j} + b sum_{j=1}^{n} m_j m_{n+2-j},
/// i.e. the (1+b)-normalized recursion with the j = 0 term b m_{n+2} moved to
/// the left. No division occurs, so b = -1 needs no special case.
template <Scalar T>
MomentSequence<T> moments(const MeixnerParams<T>& p, int order) {
    p.validate();
    detail::check_order(order);
    std::vector<T> m{T(1)};
    if (order >= 1) m.push_back(T(0));
    for (int n = 0; n + 2 <= order; ++n) {
        T next(0);
        for (int j = 0; j <= n; ++j) next += m[j] * m[n - j];
        T with_a(0);
        for (int j = 0; j <= n; ++j) with_a += m[j] * m[n + 1 - j];
        T with_b(0);
        for (int j = 1; j <= n; ++j) with_b += m[j] * m[n + 2 - j];
        m.push_back(next + p.a * with_a + p.b * with_b);
    }
    return MomentSequence<T>(std::move(m));
}

/// Raw moments of the semicircle law: central moments Catalan(k) var^k at
/// order 2k, shifted binomially by the mean.
template <Scalar T>
MomentSequence<T> semicircle_moments(const SemicircleParams<T>& w, int order) {
    if (w.variance < T(0)) throw DomainError("semicircle variance must be >= 0");
    detail::check_order(order);
    std::vector<T> central(order + 1, T(0));
    for (int k = 0; 2 * k <= order; ++k) central[2 * k] = catalan_number<T>(k) * ipow(w.variance, k);
    std::vector<T> raw(order + 1, T(0));
    for (int n = 0; n <= order; ++n)
        for (int k = 0; k <= n; k += 2) raw[n] += binomial_coefficient<T>(n, k) * ipow(w.mean, n - k) * central[k];
    return MomentSequence<T>(std::move(raw));
}

/// R_1..R_N of mu_{a,b}. All methods agree; semicircle needs b >= 0.
template <Scalar T>
CumulantSequence<T> cumulants(const MeixnerParams<T>& p, int order, CumulantMethod method = CumulantMethod::nc_le2) {
    p.validate();
    if (order < 2) throw DomainError("cumulants need order >= 2");
    detail::check_order(order);
    switch (method) {
        case CumulantMethod::nc_le2: {
            // R_{n+2} = sum over NC<=2(n) of a^{singletons} b^{pairs}
            std::vector<T> r{T(0), T(1)};
            for (int n = 1; n + 2 <= order; ++n) {
                const auto counts = nc_le2_pair_counts(n);
                T sum(0);
                for (int pairs = 0; pairs < static_cast<int>(counts.size()); ++pairs) {
                    if (!counts[pairs]) continue;
                    sum += T(static_cast<long long>(counts[pairs])) * ipow(p.a, n - 2 * pairs) * ipow(p.b, pairs);
                }
                r.push_back(sum);
            }
            return CumulantSequence<T>(std::move(r));
        }
        case CumulantMethod::semicircle: {
            if (p.b < T(0))
                throw DomainError("semicircle cumulant route needs b >= 0 (got b = " + to_string(p.b) + ")");
            const auto w = semicircle_moments(SemicircleParams<T>{p.a, p.b}, order - 2);
            std::vector<T> r{T(0)};
            for (int n = 0; n + 2 <= order; ++n) r.push_back(w[n]);
            return CumulantSequence<T>(std::move(r));
        }
        case CumulantMethod::from_moments:
            return moments_to_cumulants(moments(p, order));
    }
    throw DomainError("unknown cumulant method");
}

/// Monic orthogonal polynomial p_n(x): p_0 = 1, p_1 = x, p_2 = x^2 - a x - 1,
/// p_{n+1} = (x - a) p_n - (1 + b) p_{n-1} for n >= 2.
template <Scalar T>
T orthogonal_polynomial(const MeixnerParams<T>& p, int degree, const T& x) {
    if (degree < 0) throw DomainError("polynomial degree must be >= 0");
    if (degree == 0) return T(1);
    T prev(1);
    T cur = x;
    for (int n = 1; n < degree; ++n) {
        const T off = n == 1 ? T(1) : T(1) + p.b;
        T next = (x - p.a) * cur - off * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

struct ClassificationDetail {
    MeixnerType type;
    std::vector<std::string> predicates;  // the inequalities that selected `type`
};

template <Scalar T>
ClassificationDetail classify_detail(const MeixnerParams<T>& p) {
    p.validate();
    const T disc = p.a * p.a - T(4) * p.b;
    const bool gamma_boundary = is_exact_v<T> ? disc == T(0) : abs_value(to_double(disc)) <= 1e-12;
    if (p.b < T(0)) return {MeixnerType::FreeBinomial, {"-1 <= b < 0"}};
    if (p.b == T(0)) {
        if (p.a == T(0)) return {MeixnerType::Semicircle, {"a = 0", "b = 0"}};
        return {MeixnerType::FreePoisson, {"b = 0", "a != 0"}};
    }
    if (gamma_boundary) return {MeixnerType::FreeGamma, {"b > 0", "a^2 = 4b"}};
    if (disc > T(0)) return {MeixnerType::FreePascal, {"b > 0", "a^2 > 4b"}};
    return {MeixnerType::PureFreeMeixner, {"b > 0", "a^2 < 4b"}};
}

template <Scalar T>
MeixnerType classify(const MeixnerParams<T>& p) {
    return classify_detail(p).type;
}

/// Exact square root of a non-negative rational, if it exists.
std::optional<Rational> exact_sqrt(const Rational& x);

/// mu_{a,b} = D_{sqrt|b|}( mu_{a/sqrt|b|, -1}^{boxplus t} ), t = -1/b, for -1 <= b < 0.
/// Irrational quantities are carried by their squares.
template <Scalar T>
struct BinomialDecomposition {
    T two_point_a_squared;
    int two_point_a_sign;
    T t;
    T dilation_squared;

    MeixnerParams<double> two_point() const {
        return {two_point_a_sign * std::sqrt(to_double(two_point_a_squared)), -1.0};
    }
    double dilation() const { return std::sqrt(to_double(dilation_squared)); }

    /// The two-point parameters exactly, when a/sqrt|b| is rational.
    std::optional<MeixnerParams<T>> exact_two_point() const {
        if constexpr (is_exact_v<T>) {
            auto root = exact_sqrt(two_point_a_squared);
            if (!root) return std::nullopt;
            return MeixnerParams<T>{T(two_point_a_sign) * *root, T(-1)};
        } else {
            return two_point();
        }
    }
    std::optional<T> exact_dilation() const {
        if constexpr (is_exact_v<T>)
            return exact_sqrt(dilation_squared);
        else
            return dilation();
    }
};

template <Scalar T>
BinomialDecomposition<T> binomial_decomposition(const MeixnerParams<T>& p) {
    p.validate();
    if (!(p.b < T(0))) throw DomainError("binomial decomposition needs -1 <= b < 0 (got b = " + to_string(p.b) + ")");
    const T abs_b = -p.b;
    const int sign = p.a > T(0) ? 1 : (p.a < T(0) ? -1 : 0);
    return {p.a * p.a / abs_b, sign, T(1) / abs_b, abs_b};
}

/// Law of X_t for the free Levy process: D_{sqrt t}(mu_{eta/sqrt t, sigma/t}).
template <Scalar T>
struct LevyMarginal {
    T a_squared;
    int a_sign;
    T b;
    T dilation_squared;  // = t

    MeixnerParams<double> params() const { return {a_sign * std::sqrt(to_double(a_squared)), to_double(b)}; }
    double dilation() const { return std::sqrt(to_double(dilation_squared)); }
};

template <Scalar T>
LevyMarginal<T> levy_marginal(const LevyParams<T>& l, const T& t) {
    l.validate();
    if (!(t > T(0))) throw DomainError("Levy time t = " + to_string(t) + " must be > 0");
    const int sign = l.eta > T(0) ? 1 : (l.eta < T(0) ? -1 : 0);
    return {l.eta * l.eta / t, sign, l.sigma / t, t};
}

/// R_n(X_t) = t R_n(X_1), with X_1 ~ mu_{eta, sigma}.
template <Scalar T>
CumulantSequence<T> levy_cumulants(const LevyParams<T>& l, const T& t, int order) {
    l.validate();
    if (!(t > T(0))) throw DomainError("Levy time t = " + to_string(t) + " must be > 0");
    return convolution_power(cumulants(MeixnerParams<T>{l.eta, l.sigma}, order), t, PowerMode::formal);
}

/// Cumulants of the dilation by a factor whose square is `lambda_squared`.
/// Exact only for symmetric sequences; odd-order nonzero cumulants throw DomainError.
template <Scalar T>
CumulantSequence<T> dilate_by_root(const CumulantSequence<T>& r, const T& lambda_squared) {
    if (lambda_squared < T(0)) throw DomainError("squared dilation must be >= 0");
    std::vector<T> out(r.values());
    for (int n = 1; n <= r.order(); ++n) {
        if (n % 2 == 1) {
            if (!(out[n - 1] == T(0)))
                throw DomainError("dilation by a square root needs vanishing odd cumulants");
            continue;
        }
        out[n - 1] *= ipow(lambda_squared, n / 2);
    }
    return CumulantSequence<T>(std::move(out));
}

// ---------------------------------------------------------------------------
// Analytic (double precision)

/// Cauchy-Stieltjes transform G(z) = int mu(dy) / (z - y). The square root
/// is taken so that sqrt((z-a)^2 - 4(1+b)) ~ z - a at infinity.
/// Throws DomainError on the real support or at an atom.
Complex cauchy_transform(const MeixnerParams<double>& p, Complex z);

/// Absolutely continuous density; zero outside the open support.
double density(const MeixnerParams<double>& p, double x);

Interval support(const MeixnerParams<double>& p);

/// Point masses: residues of G at the real roots of b x^2 + a x + 1 outside
/// the open support, kept when the weight exceeds 1e-12. Sorted by location.
std::vector<Atom> atoms(const MeixnerParams<double>& p);

MeixnerLaw make_law(const MeixnerParams<double>& p);

/// R-transform r(z) = 2z / (1 - a z + sqrt((1 - a z)^2 - 4 b z^2)), r(0) = 0.
/// Throws DomainError when z is within a relative 1e-6 of the nearest branch point.
Complex r_transform(const MeixnerParams<double>& p, Complex z);

/// |z| bound used by moment_generating: 0.2 / (1 + |a| + sqrt(1 + |b|)).
double series_radius(const MeixnerParams<double>& p);

enum class SeriesGuard { enforce, skip };

/// Truncated M(z) = sum_{n <= N} m_n z^n.
Complex moment_generating(const MeixnerParams<double>& p, Complex z, int order = 30,
                          SeriesGuard guard = SeriesGuard::enforce);

/// (z^2 + a z + b) M^2 - (1 + a z + 2b) M + 1 + b.
Complex moment_generating_residual(const MeixnerParams<double>& p, Complex z, Complex m);

/// z b r^2 - (1 - a z) r + z.
Complex r_transform_residual(const MeixnerParams<double>& p, Complex z, Complex r);

/// Leading n x n block of the Jacobi matrix: diagonal (0, a, a, ...),
/// off-diagonal (1, sqrt(1+b), sqrt(1+b), ...).
struct JacobiCoefficients {
    std::vector<double> diagonal;
    std::vector<double> offdiagonal;
};

JacobiCoefficients jacobi_coefficients(const MeixnerParams<double>& p, int n);

/// r_{X_t}(z) = 2 z t / (1 - eta z + sqrt((1 - eta z)^2 - 4 z^2 sigma)).
Complex levy_r_transform(const LevyParams<double>& l, double t, Complex z);

}  // namespace freemeixner
