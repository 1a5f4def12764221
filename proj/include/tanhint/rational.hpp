#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tanhint {

using Int = boost::multiprecision::cpp_int;

// Canonical exact fraction: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
// boost's rational adaptor maintains this form through every operation and
// signals division by zero with std::overflow_error.
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den in canonical form. The sign moves into the numerator;
/// den == 0 is rejected here (boost would otherwise abort on a negative
/// denominator passed straight to the two-argument constructor).
inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline Int factorial(int k) {
    if (k < 0) throw std::domain_error("factorial of negative integer");
    Int r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

/// base^exp for exp >= 0, with the convention 0^0 = 1.
inline Int int_pow(Int base, int exp) {
    if (exp < 0) throw std::domain_error("int_pow requires a nonnegative exponent");
    Int r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline Int pow10(int k) { return int_pow(Int(10), k); }

/// Generalized binomial coefficient top*(top-1)*...*(top-k+1)/k! for any
/// integer upper index, negative included. Computed by the falling-factorial
/// product with stepwise division (each prefix is itself a binomial
/// coefficient, so every division is exact); never via factorial ratios.
inline Rational binomial(const Int& top, int k) {
    if (k < 0) throw std::domain_error("binomial requires k >= 0");
    Int c = 1;
    for (int i = 0; i < k; ++i) {
        c *= top - i;
        c /= i + 1;
    }
    return Rational(c);
}

inline Rational binomial(int top, int k) { return binomial(Int(top), k); }

/// "num/den" in lowest terms, "/den" omitted for integers.
inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Parses the serialization produced by format_rational (canonicalizing as
/// needed when reading foreign input such as "4/6").
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
        return make_rational(Int(std::string(text.substr(0, slash))),
                             Int(std::string(text.substr(slash + 1))));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    }
}

}  // namespace tanhint
