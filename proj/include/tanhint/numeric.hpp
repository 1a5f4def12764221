#pragma once

#include "tanhint/bigfloat.hpp"
#include "tanhint/rational.hpp"
#include "tanhint/zeta_combination.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tanhint {

namespace detail {

inline int digit_count(const Int& v) { return static_cast<int>(Int(abs(v)).str().size()); }

/// Extends `cache` so it holds B_0..B_k (B_1 = -1/2 convention) and returns
/// B_k, via the recurrence sum_{j<=k} C(k+1, j) B_j = [k = 0].
inline const Rational& bernoulli_at(std::vector<Rational>& cache, int k) {
    while (static_cast<int>(cache.size()) <= k) {
        const int t = static_cast<int>(cache.size());
        if (t == 0) {
            cache.emplace_back(1);
            continue;
        }
        Rational acc(0);
        for (int j = 0; j < t; ++j) acc += binomial(t + 1, j) * cache[j];
        cache.push_back(-acc / (t + 1));
    }
    return cache[k];
}

inline Int pochhammer(int s, int count) {
    Int p = 1;
    for (int i = 0; i < count; ++i) p *= s + i;
    return p;
}

// First omitted Euler-Maclaurin term for zeta(s) at cutoff N after q
// correction terms: |B_{2q+2}|/(2q+2)! * s(s+1)...(s+2q) * N^-(s+2q+1).
// For real s > 1 the remainder is bounded in magnitude by this term.
inline Rational em_remainder_bound(int s, int N, int q, std::vector<Rational>& bern) {
    return abs(bernoulli_at(bern, 2 * q + 2)) / Rational(factorial(2 * q + 2)) *
           Rational(pochhammer(s, 2 * q + 1)) / Rational(int_pow(Int(N), s + 2 * q + 1));
}

/// zeta(s) as an exact rational with |result - zeta(s)| <= 10^(-digits),
/// by Euler-Maclaurin summation:
///   zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
///           + sum_{r<=q} B_{2r}/(2r)! * s(s+1)...(s+2r-2) * N^-(s+2r-1) + R,
/// with (N, q) grown until the computed remainder bound drops below target.
/// Everything, including the bound comparison, runs in exact arithmetic.
inline Rational zeta_rational(int s, int digits) {
    if (s < 2) throw std::domain_error("zeta diverges for s < 2");
    const Rational target = make_rational(1, pow10(digits));
    std::vector<Rational> bern;

    int N = std::max(16, (2 * digits) / 5 + 6);
    int q = 0;
    for (;;) {
        bool found = false;
        Rational prev;
        for (q = 1; q <= 8 * N; ++q) {
            const Rational bound = em_remainder_bound(s, N, q, bern);
            if (bound <= target) {
                found = true;
                break;
            }
            // past the sweet spot the terms grow again; a larger N is needed
            if (q > 1 && bound > prev) break;
            prev = bound;
        }
        if (found) break;
        N *= 2;
    }

    Rational v(0);
    for (int n = 1; n < N; ++n) v += make_rational(1, int_pow(Int(n), s));
    v += make_rational(1, int_pow(Int(N), s - 1) * (s - 1));
    v += make_rational(1, int_pow(Int(N), s) * 2);
    for (int r = 1; r <= q; ++r)
        v += bernoulli_at(bern, 2 * r) / Rational(factorial(2 * r)) *
             Rational(pochhammer(s, 2 * r - 1)) / Rational(int_pow(Int(N), s + 2 * r - 1));
    return v;
}

/// atan(1/x) as an exact rational with truncation error below `max_tail`
/// (alternating series: the tail is bounded by its first term).
inline Rational machin_arctan(int x, const Rational& max_tail) {
    Rational sum(0);
    Int xpow = x;
    const Int xx = Int(x) * x;
    for (int k = 0;; ++k) {
        const Rational term = make_rational(1, (2 * k + 1) * xpow);
        if (term <= max_tail) break;
        sum += (k % 2 != 0) ? -term : term;
        xpow *= xx;
    }
    return sum;
}

/// pi as an exact rational with |result - pi| <= 10^(-digits), via Machin's
/// formula pi = 16*atan(1/5) - 4*atan(1/239) with the budget split between
/// the two tails.
inline Rational pi_rational(int digits) {
    const Rational target = make_rational(1, pow10(digits));
    return 16 * machin_arctan(5, target / 32) - 4 * machin_arctan(239, target / 8);
}

inline Rational rational_pow(const Rational& base, int exp) {
    return make_rational(int_pow(numerator(base), exp), int_pow(denominator(base), exp));
}

}  // namespace detail

/// zeta(s) for odd s >= 3, correct to 10^(-digits) absolute.
inline BigFloat zeta_odd(int s, int digits) {
    if (s < 2) throw std::domain_error("zeta diverges for s < 2");
    if (s % 2 == 0) throw std::domain_error("only odd zeta arguments are supported");
    return BigFloat::from_rational(detail::zeta_rational(s, digits + 8), digits);
}

/// pi, correct to 10^(-digits) absolute.
inline BigFloat pi_digits(int digits) {
    if (digits < 1) throw std::domain_error("need at least one digit");
    return BigFloat::from_rational(detail::pi_rational(digits + 8), digits);
}

/// Numeric value of sum_s c_s * zeta(s)/pi^(s-1), correct to 10^(-digits)
/// absolute. zeta and pi approximants are taken at a working precision wide
/// enough that coefficient size and the (s-1)-fold pi-power error growth
/// stay inside the budget:
///   |c*(zh/ph^(s-1) - z/p^(s-1))| <= |c| * (1 + 2s) * 10^(-wp)
/// for |zh-z|, |ph-p| <= 10^(-wp), ph >= 3, z <= 1.21.
inline BigFloat eval_combination(const ZetaCombination& zc, int digits) {
    if (zc.empty()) return BigFloat::from_rational(Rational(0), digits);

    int margin = 0;
    for (const auto& [s, c] : zc.terms()) {
        const int coeff_mag =
            std::max(0, detail::digit_count(numerator(c)) - detail::digit_count(denominator(c)) + 1);
        margin = std::max(margin, coeff_mag + detail::digit_count(Int(2 * s + 1)));
    }
    const int wp = digits + margin + detail::digit_count(Int(zc.terms().size())) + 4;

    const Rational pi_hat = detail::pi_rational(wp);
    Rational acc(0);
    for (const auto& [s, c] : zc.terms())
        acc += c * detail::zeta_rational(s, wp) / detail::rational_pow(pi_hat, s - 1);
    return BigFloat::from_rational(acc, digits);
}

}  // namespace tanhint
