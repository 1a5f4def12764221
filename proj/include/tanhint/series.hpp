#pragma once

#include "tanhint/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tanhint {

/// Truncated Laurent series over Rational: exact coefficients for every
/// exponent in [lowest, order), unknown from `order` on. Canonical form keeps
/// the leading stored coefficient nonzero; a series that is zero up to its
/// order stores no coefficients and has lowest == order.
///
/// Truncation propagation under multiplication follows
///   order(a*b) = min(lowest(a) + order(b), lowest(b) + order(a)),
/// the largest exponent range whose coefficients are actually determined by
/// the two truncated inputs.
class TruncatedSeries {
public:
    TruncatedSeries(int lowest, std::vector<Rational> coeffs)
        : lowest_(lowest), coeffs_(std::move(coeffs)),
          order_(lowest + static_cast<int>(coeffs_.size())) {
        normalize();
    }

    static TruncatedSeries zero(int order) { return TruncatedSeries(order, {}); }

    static TruncatedSeries constant(const Rational& c, int order) {
        return monomial(c, 0, order);
    }

    /// c * y^exponent, truncated at `order` (exponent < order required).
    static TruncatedSeries monomial(const Rational& c, int exponent, int order) {
        if (exponent >= order) throw std::invalid_argument("monomial exponent at or past truncation order");
        std::vector<Rational> coeffs(order - exponent);
        coeffs[0] = c;
        return TruncatedSeries(exponent, std::move(coeffs));
    }

    /// exp(c*y) truncated: sum of c^k/k! * y^k for k < order. Requires order >= 1.
    static TruncatedSeries from_exponential(const Rational& c, int order) {
        if (order < 1) throw std::invalid_argument("exponential series needs order >= 1");
        std::vector<Rational> coeffs(order);
        coeffs[0] = 1;
        for (int k = 1; k < order; ++k) coeffs[k] = coeffs[k - 1] * c / k;
        return TruncatedSeries(0, std::move(coeffs));
    }

    int lowest() const { return lowest_; }
    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Exact coefficient of y^e; zero below `lowest`, unknown (an error) at or
    /// past `order`.
    Rational coefficient(int e) const {
        if (e >= order_)
            throw std::out_of_range("coefficient of y^" + std::to_string(e) +
                                    " lies at or past truncation order " + std::to_string(order_));
        if (e < lowest_) return Rational(0);
        return coeffs_[e - lowest_];
    }

    /// Multiplication by y^d (Laurent shift).
    TruncatedSeries shifted(int d) const {
        TruncatedSeries r = *this;
        r.lowest_ += d;
        r.order_ += d;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int order = std::min(a.order_, b.order_);
        const int lowest = std::min({a.lowest_, b.lowest_, order});
        std::vector<Rational> coeffs(order - lowest);
        for (int e = a.lowest_; e < std::min(a.order_, order); ++e) coeffs[e - lowest] += a.coeffs_[e - a.lowest_];
        for (int e = b.lowest_; e < std::min(b.order_, order); ++e) coeffs[e - lowest] += b.coeffs_[e - b.lowest_];
        return TruncatedSeries(lowest, std::move(coeffs));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + b * Rational(-1);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c) {
        if (c == 0) return zero(a.order_);
        TruncatedSeries r = a;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }

    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return a * c; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int order = std::min(a.lowest_ + b.order_, b.lowest_ + a.order_);
        const int lowest = std::min(a.lowest_ + b.lowest_, order);
        std::vector<Rational> coeffs(order - lowest);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                const int e = a.lowest_ + static_cast<int>(i) + b.lowest_ + static_cast<int>(j);
                if (e >= order) break;
                coeffs[e - lowest] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return TruncatedSeries(lowest, std::move(coeffs));
    }

    /// Multiplicative inverse of a series with a unit constant part
    /// (lowest == 0 after normalization). Coefficients follow from the
    /// convolution identity a*b = 1; the result keeps the input's order.
    friend TruncatedSeries reciprocal(const TruncatedSeries& a) {
        if (a.is_zero() || a.lowest_ != 0)
            throw std::domain_error("series reciprocal requires a nonzero constant term");
        const int n = a.order_;
        std::vector<Rational> b(n);
        const Rational inv0 = Rational(1) / a.coeffs_[0];
        b[0] = inv0;
        for (int k = 1; k < n; ++k) {
            Rational acc(0);
            const int top = std::min<int>(k, static_cast<int>(a.coeffs_.size()) - 1);
            for (int i = 1; i <= top; ++i) acc += a.coeffs_[i] * b[k - i];
            b[k] = -acc * inv0;
        }
        return TruncatedSeries(0, std::move(b));
    }

    /// a^p for any integer p. Negative powers factor off y^lowest, invert the
    /// unit part, and shift back; they require a nonzero leading coefficient.
    friend TruncatedSeries pow(const TruncatedSeries& a, int p) {
        const int relative = a.order_ - a.lowest_;
        if (p == 0) return constant(1, std::max(relative, 1));
        if (a.is_zero()) {
            if (p < 0) throw std::domain_error("cannot invert a series that is zero up to its order");
            return zero(p * a.order_);
        }
        if (p < 0) {
            const int shift = a.lowest_;
            return pow(reciprocal(a.shifted(-shift)), -p).shifted(shift * p);
        }
        TruncatedSeries r = constant(1, relative);
        for (int i = 0; i < p; ++i) r = r * a;
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "O(y^" + std::to_string(order_) + ")";
        std::ostringstream out;
        for (int e = lowest_; e < order_; ++e) {
            const Rational c = coeffs_[e - lowest_];
            if (c == 0) continue;
            if (out.tellp() > 0) out << " + ";
            out << format_rational(c) << "*y^" << e;
        }
        out << " + O(y^" << order_ << ")";
        return out.str();
    }

private:
    void normalize() {
        std::size_t skip = 0;
        while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
        if (skip > 0) {
            coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(skip));
            lowest_ += static_cast<int>(skip);
        }
        if (coeffs_.empty()) lowest_ = order_;
    }

    int lowest_;
    std::vector<Rational> coeffs_;
    int order_;
};

/// Coefficient-wise equality on [min lowest, order). `order` must not exceed
/// either reliable order — comparing unknown coefficients is a logic error.
inline bool agree_up_to(const TruncatedSeries& a, const TruncatedSeries& b, int order) {
    if (order > a.order() || order > b.order())
        throw std::logic_error("series comparison past a truncation order");
    for (int e = std::min(a.lowest(), b.lowest()); e < order; ++e)
        if (a.coefficient(e) != b.coefficient(e)) return false;
    return true;
}

}  // namespace tanhint
