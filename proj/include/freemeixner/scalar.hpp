#pragma once

// Scalar policy: every sequence-level routine is a template over either
// `double` or the exact `Rational` type below.

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>
#include <type_traits>

namespace freemeixner {

using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

template <Scalar T>
T from_int(long long v) {
    return T(v);
}

template <Scalar T>
T ipow(const T& base, int exponent) {
    T result(1);
    T b = base;
    unsigned e = exponent < 0 ? unsigned(-exponent) : unsigned(exponent);
    while (e) {
        if (e & 1U) result *= b;
        b *= b;
        e >>= 1U;
    }
    if (exponent < 0) result = T(1) / result;
    return result;
}

inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return boost::multiprecision::abs(x); }

/// Equality used by verifiers: exact for Rational, absolute tolerance for double.
inline bool nearly_equal(double x, double y, double tol) { return std::fabs(x - y) <= tol; }
inline bool nearly_equal(const Rational& x, const Rational& y, double /*tol*/) { return x == y; }

/// Parses "p/q", an integer, or a decimal literal ("-0.125", "1e-3") exactly.
/// Throws DomainError on malformed input.
Rational parse_rational(std::string_view text);

/// True when `text` is an integer or "p/q" literal (no decimal point or exponent).
bool is_rational_literal(std::string_view text);

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& x);
/// Shortest round-trip decimal representation.
std::string to_string(double x);

}  // namespace freemeixner
