#include "freemeixner/scalar.hpp"

#include "freemeixner/errors.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace freemeixner {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view strip_sign(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return s;
}

Rational parse_integer(std::string_view s) {
    bool negative = !s.empty() && s.front() == '-';
    std::string_view digits = strip_sign(s);
    if (!all_digits(digits)) throw DomainError("malformed integer '" + std::string(s) + "'");
    Rational r{std::string(digits)};
    return negative ? Rational(-r) : r;
}

}  // namespace

bool is_rational_literal(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return all_digits(strip_sign(text));
    return all_digits(strip_sign(text.substr(0, slash))) && all_digits(text.substr(slash + 1));
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw DomainError("empty number");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        Rational num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) throw DomainError("malformed denominator in '" + std::string(text) + "'");
        Rational den{std::string(den_text)};
        if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
        return num / den;
    }

    // Decimal with optional exponent: [sign] digits [. digits] [e [sign] digits]
    std::string_view rest = text;
    bool negative = !rest.empty() && rest.front() == '-';
    rest = strip_sign(rest);
    int exponent = 0;
    if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = rest.substr(e + 1);
        bool exp_negative = !exp_text.empty() && exp_text.front() == '-';
        exp_text = strip_sign(exp_text);
        if (!all_digits(exp_text)) throw DomainError("malformed exponent in '" + std::string(text) + "'");
        exponent = std::atoi(std::string(exp_text).c_str());
        if (exp_negative) exponent = -exponent;
        rest = rest.substr(0, e);
    }
    std::string mantissa;
    if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        std::string_view whole = rest.substr(0, dot);
        std::string_view frac = rest.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac)))
            throw DomainError("malformed number '" + std::string(text) + "'");
        mantissa = std::string(whole) + std::string(frac);
        exponent -= static_cast<int>(frac.size());
    } else {
        if (!all_digits(rest)) throw DomainError("malformed number '" + std::string(text) + "'");
        mantissa = std::string(rest);
    }
    Rational value(mantissa);
    value *= ipow(Rational(10), exponent);
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& x) {
    auto num = boost::multiprecision::numerator(x);
    auto den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(double x) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

}  // namespace freemeixner
