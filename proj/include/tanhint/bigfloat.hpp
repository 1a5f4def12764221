#pragma once

#include "tanhint/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace tanhint {

/// Arbitrary-precision decimal value mantissa * 10^(-scale), tagged with the
/// digit count D its producing operation guarantees: |stored - true| <= 10^(-D)
/// (stronger than the 10^(1-D) the callers rely on). The scale carries guard
/// digits beyond D so the tag, not the storage, is the precision statement.
class BigFloat {
public:
    BigFloat() : mantissa_(0), scale_(0), digits_(0) {}

    /// Rounds `value` (an approximation already within 10^(-digits-1) of the
    /// true quantity) to digits+5 decimal places, half away from zero.
    static BigFloat from_rational(const Rational& value, int digits) {
        const int scale = std::max(digits, 1) + 5;
        const Int num = numerator(value) * pow10(scale);
        const Int den = denominator(value);
        Int q, r;
        divide_qr(num, den, q, r);
        if (2 * abs(r) >= den) q += (num < 0) ? -1 : 1;
        return BigFloat(std::move(q), scale, digits);
    }

    Rational value() const { return make_rational(mantissa_, pow10(scale_)); }
    int digits() const { return digits_; }
    double to_double() const { return value().template convert_to<double>(); }

    /// Decimal rendering rounded to `significant` digits, plain notation,
    /// trailing zeros trimmed.
    std::string to_string(int significant) const {
        if (significant < 1) throw std::invalid_argument("need at least one significant digit");
        if (mantissa_ == 0) return "0";
        std::string digits = Int(abs(mantissa_)).str();
        // exponent of the leading digit: value = 0.digits * 10^point
        int point = static_cast<int>(digits.size()) - scale_;
        if (static_cast<int>(digits.size()) > significant) {
            const bool round_up = digits[significant] >= '5';
            digits.resize(significant);
            if (round_up) {
                int i = significant - 1;
                while (i >= 0 && digits[i] == '9') digits[i--] = '0';
                if (i < 0) {
                    digits.insert(digits.begin(), '1');
                    ++point;
                } else {
                    ++digits[i];
                }
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

        std::string out = (mantissa_ < 0) ? "-" : "";
        const int len = static_cast<int>(digits.size());
        if (point <= 0) {
            out += "0." + std::string(-point, '0') + digits;
        } else if (point >= len) {
            out += digits + std::string(point - len, '0');
        } else {
            out += digits.substr(0, point) + "." + digits.substr(point);
        }
        return out;
    }

    std::string to_string() const { return to_string(std::max(digits_, 1)); }

private:
    BigFloat(Int mantissa, int scale, int digits)
        : mantissa_(std::move(mantissa)), scale_(scale), digits_(digits) {}

    Int mantissa_;
    int scale_;
    int digits_;
};

}  // namespace tanhint
