#pragma once

#include "tanhint/rational.hpp"
#include "tanhint/zeta_combination.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace tanhint {

namespace detail {

// Triple sum over lambda in [0,m], mu in [0,P], nu in [0,mu] of
//   (-1)^(mu+nu) * m/(m+mu) * C(m,lambda) * C(P,mu) * C(mu,nu)
//     * (m - 2*lambda + mu - 2*nu)^(m+mu-j) / (2^(m+mu) * (m+mu-j)!)
// in exact rationals. The power uses the 0^0 = 1 convention of int_pow;
// several (lambda, mu, nu) cells hit a zero base with zero exponent and the
// published values require those cells to contribute.
inline Rational closed_form_inner_sum(int m, int P, int j) {
    Rational total(0);
    for (int lambda = 0; lambda <= m; ++lambda) {
        for (int mu = 0; mu <= P; ++mu) {
            for (int nu = 0; nu <= mu; ++nu) {
                const int base = m - 2 * lambda + mu - 2 * nu;
                const int exponent = m + mu - j;
                Rational term = binomial(m, lambda) * binomial(P, mu) * binomial(mu, nu);
                term *= Rational(m, m + mu);
                term *= make_rational(int_pow(Int(base), exponent),
                                      int_pow(Int(2), m + mu) * factorial(exponent));
                total += ((mu + nu) % 2 != 0) ? -term : term;
            }
        }
    }
    return total;
}

}  // namespace detail

/// Closed form of the integral of tanh^m(z)/z^n over (0, inf) with the half-m
/// bound P made explicit. P must be floor(m/2) or ceil(m/2); the two choices
/// provably agree (the extra mu = ceil(m/2) layer cancels for odd m), which
/// the test suite checks rather than assumes.
inline ZetaCombination theorem_sum_with_bound(const IntegralSpec& spec, int half_m_bound) {
    const int m = spec.m();
    const int n = spec.n();
    if (half_m_bound != m / 2 && half_m_bound != (m + 1) / 2)
        throw std::invalid_argument("half-m bound must be floor(m/2) or ceil(m/2), got " +
                                    std::to_string(half_m_bound));
    const int P = half_m_bound;
    const Rational prefactor = binomial(m + P, m);

    std::map<int, Rational> terms;
    for (int j = (m % 2 == 0) ? 2 : 1; j <= m; j += 2) {
        const int s = n + j - 1;  // odd: j ≡ m ≡ n (mod 2) makes n+j even
        Rational c = prefactor * binomial(-n, j - 1) * Rational(int_pow(Int(2), s) - 1);
        c *= detail::closed_form_inner_sum(m, P, j);
        // (pi*i)^(s-1) resolved to a real sign: i^(s-1) = (-1)^((s-1)/2),
        // the pi power folds into the zeta(s)/pi^(s-1) convention
        if (((s - 1) / 2) % 2 != 0) c = -c;
        terms[s] += c;
    }
    return ZetaCombination(std::move(terms));
}

/// Exact evaluation of the integral of tanh^m(z)/z^n over (0, inf) as a
/// rational combination of zeta(s)/pi^(s-1).
inline ZetaCombination theorem_sum(const IntegralSpec& spec) {
    return theorem_sum_with_bound(spec, (spec.m() + 1) / 2);
}

}  // namespace tanhint
