#pragma once

#include "tanhint/rational.hpp"
#include "tanhint/series.hpp"
#include "tanhint/zeta_combination.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace tanhint {

namespace detail {

// (e^y + e^{-y})/2 truncated at `order`
inline TruncatedSeries cosh_series(int order) {
    return (TruncatedSeries::from_exponential(1, order) +
            TruncatedSeries::from_exponential(-1, order)) *
           Rational(1, 2);
}

// (e^y - e^{-y})/(2y) truncated at `order`: unit constant term, even
// exponents only (1 + y^2/6 + y^4/120 + ...)
inline TruncatedSeries sinhc_series(int order) {
    const TruncatedSeries sinh2 = TruncatedSeries::from_exponential(1, order + 1) -
                                  TruncatedSeries::from_exponential(-1, order + 1);
    return (sinh2 * Rational(1, 2)).shifted(-1);
}

// cosh(y)^m * ((e^y - e^{-y})/(2y))^{-m}, i.e. (y*coth(y))^m, truncated at
// order m+1. An even series with unit constant term; its coefficients carry
// the residue data of tanh^m(z)/z^n at each pole.
inline TruncatedSeries residue_kernel(int m) {
    const int order = m + 1;
    return pow(cosh_series(order), m) * pow(sinhc_series(order), -m);
}

}  // namespace detail

/// Residue data at the generic pole z_k = (k - 1/2)*pi*i:
///   res_{z=z_k} tanh^m(z)/z^n = sum_j r_j * z_k^{-(n+j-1)}
/// over 1 <= j <= m with j ≡ m (mod 2). The r_j do not depend on k.
class ResidueProfile {
public:
    ResidueProfile(int m, int n, std::map<int, Rational> coeffs)
        : m_(m), n_(n), coeffs_(std::move(coeffs)) {}

    int m() const { return m_; }
    int n() const { return n_; }
    const std::map<int, Rational>& coefficients() const { return coeffs_; }

    std::string to_string() const {
        std::ostringstream out;
        bool first = true;
        for (const auto& [j, r] : coeffs_) {
            if (!first) out << " + ";
            out << format_rational(r) << "*z_k^-(" << n_ + j - 1 << ")";
            first = false;
        }
        return out.str();
    }

private:
    int m_;
    int n_;
    std::map<int, Rational> coeffs_;
};

/// Extracts r_j = C(-n, j-1) * [y^(m-j)] (cosh^m * sinhc^{-m}) from the
/// series kernel. Kernel evenness and the unit constant term are checked
/// outright; a violation means a series bug, not a user error.
inline ResidueProfile residue_profile(const IntegralSpec& spec) {
    const int m = spec.m();
    const int n = spec.n();
    const TruncatedSeries kernel = detail::residue_kernel(m);
    if (kernel.order() < m + 1)
        throw std::logic_error("residue kernel lost truncation order");
    if (kernel.coefficient(0) != 1)
        throw std::logic_error("residue kernel must have unit constant term");
    for (int e = 1; e < kernel.order(); e += 2)
        if (kernel.coefficient(e) != 0)
            throw std::logic_error("residue kernel must be even");

    std::map<int, Rational> coeffs;
    for (int j = (m % 2 == 0) ? 2 : 1; j <= m; j += 2)
        coeffs[j] = binomial(-n, j - 1) * kernel.coefficient(m - j);
    return ResidueProfile(m, n, std::move(coeffs));
}

/// Exact data of pi*i * sum_{k>=1} z_k^{-e} for the poles z_k = (k-1/2)*pi*i:
/// the sum equals sign * scale * zeta(s) / pi^(s-1) with s = e.
struct PoleSumFactor {
    int sign;        // (-1)^((e-1)/2), from i/(i^e)
    int s;           // zeta argument, = e
    Rational scale;  // 2^e - 1
};

inline PoleSumFactor pole_sum_factor(int e) {
    if (e < 2) throw std::domain_error("pole sum diverges for exponent " + std::to_string(e));
    if (e % 2 == 0)
        throw std::invalid_argument("pole sum factor is imaginary for even exponent " +
                                    std::to_string(e));
    return PoleSumFactor{((e - 1) / 2) % 2 != 0 ? -1 : 1, e, Rational(int_pow(Int(2), e) - 1)};
}

/// Independent closed-form route: the integral equals pi*i times the sum of
/// residues over the upper half-plane poles, assembled term by term from the
/// residue profile and the pole-sum factors. Shares no algebra with
/// theorem_sum beyond the basic binomial kernel.
inline ZetaCombination oracle_closed_form(const IntegralSpec& spec) {
    const ResidueProfile profile = residue_profile(spec);
    std::map<int, Rational> terms;
    for (const auto& [j, r] : profile.coefficients()) {
        const PoleSumFactor f = pole_sum_factor(spec.n() + j - 1);
        terms[f.s] += r * f.scale * f.sign;
    }
    return ZetaCombination(std::move(terms));
}

}  // namespace tanhint
