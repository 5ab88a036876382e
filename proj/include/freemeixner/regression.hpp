#pragma once

// Moment-level verification of the regression characterization: for a free
// pair X, Y with S = X + Y whose cumulants split as alpha : 1 - alpha,
//   tau(X S^n)     = alpha m_{n+1}
//   tau(V^2 S^n)   = alpha beta / (1 + b) (m_n + a m_{n+1} + b m_{n+2}),   V = beta X - alpha Y
//   R_n(V, S, ..., S) = 0,  R_n(V, V, S, ..., S) = alpha beta R_n(S)
// together with the moment recursion of mu_{a,b} and the martingale
// property of free Levy processes. Conditional expectations never appear as
// operators; each identity is checked through its moments against S^n.

#include "freemeixner/cumulants.hpp"
#include "freemeixner/meixner.hpp"
#include "freemeixner/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freemeixner {

inline constexpr double kFloatVerifyTolerance = 1e-10;

struct OrderCheck {
    int order;
    double residual;
    bool passed;
    std::string label;  // which identity, when a report carries several
};

struct RegressionReport {
    std::string identity;
    int order_checked = 0;
    double max_residual = 0.0;
    std::vector<OrderCheck> checks{};
    std::vector<std::pair<std::string, std::string>> constants{};  // e.g. {"C", "2/9"}

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const OrderCheck& c) { return c.passed; });
    }
    std::optional<int> first_failure() const {
        for (const auto& c : checks)
            if (!c.passed) return c.order;
        return std::nullopt;
    }
};

namespace detail {

template <Scalar T>
void record(RegressionReport& report, int order, const T& lhs, const T& rhs, double tol, std::string label = {}) {
    const double residual = to_double(abs_value(T(lhs - rhs)));
    report.checks.push_back({order, residual, nearly_equal(lhs, rhs, tol), std::move(label)});
    report.max_residual = std::max(report.max_residual, residual);
    report.order_checked = std::max(report.order_checked, order);
}

inline Word word_with_tail(std::initializer_list<Symbol> head, int tail) {
    Word w(head);
    w.insert(w.end(), static_cast<std::size_t>(tail), Symbol::S);
    return w;
}

}  // namespace detail

/// Splits the cumulants of S ~ mu_{a,b} as alpha : 1 - alpha. Both parts are
/// laws only when b >= -min(alpha, 1 - alpha); otherwise DomainError.
template <Scalar T>
FreePairSpec<T> build_free_pair(const T& alpha, const MeixnerParams<T>& p, int order) {
    p.validate();
    if (!(alpha > T(0) && alpha < T(1)))
        throw DomainError("free pair split alpha = " + to_string(alpha) + " must lie in (0, 1)");
    const T bound = -std::min(alpha, T(T(1) - alpha));
    if (p.b < bound)
        throw DomainError("infeasible free pair: b = " + to_string(p.b) + " violates b >= -min(alpha, 1 - alpha) = " +
                          to_string(bound));
    return FreePairSpec<T>(cumulants(p, order), alpha);
}

/// Law of X / sqrt(alpha): mu_{a/sqrt(alpha), b/alpha}, carried through a^2.
template <Scalar T>
struct MarginalLaw {
    T a_squared;
    int a_sign;
    T b;

    MeixnerParams<double> params() const { return {a_sign * std::sqrt(to_double(a_squared)), to_double(b)}; }
};

template <Scalar T>
MarginalLaw<T> standardized_marginal(const T& alpha, const MeixnerParams<T>& p) {
    if (!(alpha > T(0) && alpha < T(1))) throw DomainError("alpha must lie in (0, 1)");
    const int sign = p.a > T(0) ? 1 : (p.a < T(0) ? -1 : 0);
    return {p.a * p.a / alpha, sign, p.b / alpha};
}

/// tau(X S^n) = alpha m_{n+1} for 1 <= n <= N on an arbitrary free pair.
template <Scalar T>
RegressionReport verify_linear_regression(const FreePair<T>& pair, const T& alpha, int order,
                                          double tol = kFloatVerifyTolerance) {
    RegressionReport report{.identity = "linear-regression"};
    const auto m = cumulants_to_moments(pair.s().truncated(order + 1));
    for (int n = 1; n <= order; ++n) {
        const Word w = detail::word_with_tail({Symbol::X}, n);
        detail::record(report, n, joint_moment(pair, w), T(alpha * m[n + 1]), tol);
    }
    return report;
}

template <Scalar T>
RegressionReport verify_linear_regression(const FreePairSpec<T>& spec, int order, double tol = kFloatVerifyTolerance) {
    return verify_linear_regression(spec.as_free_pair(), spec.alpha(), order, tol);
}

/// tau(V^2 S^n) against alpha beta / (1 + b) (m_n + a m_{n+1} + b m_{n+2}) for 0 <= n <= N.
template <Scalar T>
RegressionReport verify_quadratic_variance(const FreePair<T>& pair, const T& alpha, const MeixnerParams<T>& p, int order,
                                           double tol = kFloatVerifyTolerance) {
    if (p.b == T(-1)) throw DomainError("quadratic variance identity needs b != -1 (C = alpha beta / (1 + b))");
    const T beta = T(1) - alpha;
    const T constant = alpha * beta / (T(1) + p.b);
    RegressionReport report{.identity = "quadratic-variance"};
    report.constants.emplace_back("C", to_string(constant));
    const auto m = cumulants_to_moments(pair.s().truncated(order + 2));
    for (int n = 0; n <= order; ++n) {
        // V^2 = beta^2 XX - alpha beta (XY + YX) + alpha^2 YY
        const T xx = joint_moment(pair, detail::word_with_tail({Symbol::X, Symbol::X}, n));
        const T xy = joint_moment(pair, detail::word_with_tail({Symbol::X, Symbol::Y}, n));
        const T yx = joint_moment(pair, detail::word_with_tail({Symbol::Y, Symbol::X}, n));
        const T yy = joint_moment(pair, detail::word_with_tail({Symbol::Y, Symbol::Y}, n));
        const T lhs = beta * beta * xx - alpha * beta * (xy + yx) + alpha * alpha * yy;
        const T rhs = constant * (m[n] + p.a * m[n + 1] + p.b * m[n + 2]);
        detail::record(report, n, lhs, rhs, tol);
    }
    return report;
}

/// (a, b) are read off the cumulants of S: a = R_3(S), b = R_4(S) - R_3(S)^2.
template <Scalar T>
RegressionReport verify_quadratic_variance(const FreePairSpec<T>& spec, int order, double tol = kFloatVerifyTolerance) {
    const auto& s = spec.s_cumulants();
    if (s.order() < 4) throw OrderError("quadratic variance needs S cumulants through order 4");
    const MeixnerParams<T> p{s[3], T(s[4] - s[3] * s[3])};
    return verify_quadratic_variance(spec.as_free_pair(), spec.alpha(), p, order, tol);
}

/// R_n(V, S, ..., S) = 0 and R_n(V, V, S, ..., S) = alpha beta R_n(S) for 2 <= n <= N.
template <Scalar T>
RegressionReport verify_mixed_cumulants(const FreePair<T>& pair, const T& alpha, int order,
                                        double tol = kFloatVerifyTolerance) {
    const T beta = T(1) - alpha;
    RegressionReport report{.identity = "mixed-cumulants"};
    const auto s = pair.s();
    for (int n = 2; n <= order; ++n) {
        const T vs = beta * mixed_cumulant(pair, detail::word_with_tail({Symbol::X}, n - 1)) -
                     alpha * mixed_cumulant(pair, detail::word_with_tail({Symbol::Y}, n - 1));
        detail::record(report, n, vs, T(0), tol, "R(V,S,...,S)");
        const T vv = beta * beta * mixed_cumulant(pair, detail::word_with_tail({Symbol::X, Symbol::X}, n - 2)) -
                     alpha * beta * mixed_cumulant(pair, detail::word_with_tail({Symbol::X, Symbol::Y}, n - 2)) -
                     alpha * beta * mixed_cumulant(pair, detail::word_with_tail({Symbol::Y, Symbol::X}, n - 2)) +
                     alpha * alpha * mixed_cumulant(pair, detail::word_with_tail({Symbol::Y, Symbol::Y}, n - 2));
        detail::record(report, n, vv, T(alpha * beta * s[n]), tol, "R(V,V,S,...,S)");
    }
    return report;
}

template <Scalar T>
RegressionReport verify_mixed_cumulants(const FreePairSpec<T>& spec, int order, double tol = kFloatVerifyTolerance) {
    return verify_mixed_cumulants(spec.as_free_pair(), spec.alpha(), order, tol);
}

/// Moments rebuilt from the cumulants satisfy
///   m_{n+2} = 1/(1+b) sum_{j=0}^{n} m_j (m_{n-j} + a m_{n+1-j} + b m_{n+2-j})  for n + 2 <= N.
template <Scalar T>
RegressionReport verify_moment_recursion(const MeixnerParams<T>& p, int order, double tol = kFloatVerifyTolerance) {
    p.validate();
    if (p.b == T(-1)) throw DomainError("moment recursion divides by 1 + b; b = -1 is excluded");
    const auto m = cumulants_to_moments(cumulants(p, order));
    RegressionReport report{.identity = "moment-recursion"};
    for (int n = 0; n + 2 <= order; ++n) {
        T sum(0);
        for (int j = 0; j <= n; ++j) sum += m[j] * (m[n - j] + p.a * m[n + 1 - j] + p.b * m[n + 2 - j]);
        detail::record(report, n + 2, m[n + 2], T(sum / (T(1) + p.b)), tol);
    }
    return report;
}

/// tau(X_s X_u^n) = (s/u) tau(X_u^{n+1}) for 1 <= n <= N, with X_u = X_s + (X_u - X_s)
/// a free pair whose cumulants split as s : u - s.
template <Scalar T>
RegressionReport verify_levy_martingale(const LevyParams<T>& l, const T& s, const T& u, int order,
                                        double tol = kFloatVerifyTolerance) {
    l.validate();
    if (!(s > T(0))) throw DomainError("martingale check needs s > 0");
    if (!(s < u)) throw DomainError("martingale check needs s < u");
    const FreePairSpec<T> spec(levy_cumulants(l, u, std::max(order + 1, 2)), T(s / u));
    RegressionReport report = verify_linear_regression(spec, order, tol);
    report.identity = "levy-martingale";
    return report;
}

/// Orthogonality of p_0..p_N under the Gauss rule with N + 2 nodes:
/// int p_i p_j dmu = 0 for i != j and int p_n^2 dmu = (1 + b)^{n-1} for n >= 1,
/// each within tol relative to the product of the norms.
inline RegressionReport verify_orthogonality(const MeixnerParams<double>& p, int order, double tol = 1e-9) {
    p.validate();
    if (order < 1) throw DomainError("orthogonality check needs N >= 1");
    const QuadratureRule rule = gauss_rule(p, order + 2);
    std::vector<std::vector<double>> values(order + 1, std::vector<double>(rule.size()));
    for (int n = 0; n <= order; ++n)
        for (int k = 0; k < rule.size(); ++k) values[n][k] = orthogonal_polynomial(p, n, rule.nodes[k]);
    auto norm = [&](int n) { return n == 0 ? 1.0 : std::pow(1.0 + p.b, n - 1); };
    RegressionReport report{.identity = "orthogonality"};
    for (int i = 0; i <= order; ++i)
        for (int j = i; j <= order; ++j) {
            double inner = 0.0;
            for (int k = 0; k < rule.size(); ++k) inner += rule.weights[k] * values[i][k] * values[j][k];
            const double target = i == j ? norm(i) : 0.0;
            const double scale = std::max(1.0, std::sqrt(norm(i) * norm(j)));
            const double residual = std::fabs(inner - target);
            report.checks.push_back({j, residual, residual <= tol * scale, i == j ? "norm" : "off-diagonal"});
            report.max_residual = std::max(report.max_residual, residual);
        }
    report.order_checked = order;
    return report;
}

}  // namespace freemeixner
