#pragma once

#include "tanhint/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace tanhint {

enum class SpecErrorKind {
    range,     // n < 2
    ordering,  // m < n
    parity,    // m and n of different parity
};

class SpecError : public std::invalid_argument {
public:
    SpecError(SpecErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}
    SpecErrorKind kind() const { return kind_; }

private:
    SpecErrorKind kind_;
};

/// Validated parameter pair (m, n) with m >= n >= 2 and m ≡ n (mod 2); only
/// obtainable through validate_spec.
class IntegralSpec {
public:
    int m() const { return m_; }
    int n() const { return n_; }

private:
    IntegralSpec(int m, int n) : m_(m), n_(n) {}
    friend IntegralSpec validate_spec(int m, int n);
    int m_;
    int n_;
};

inline IntegralSpec validate_spec(int m, int n) {
    if (n < 2)
        throw SpecError(SpecErrorKind::range,
                        "n must be at least 2 (got n=" + std::to_string(n) + ")");
    if (m < n)
        throw SpecError(SpecErrorKind::ordering,
                        "m must be at least n (got m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
    if ((m - n) % 2 != 0)
        throw SpecError(SpecErrorKind::parity,
                        "m and n must have the same parity (got m=" + std::to_string(m) +
                            ", n=" + std::to_string(n) + ")");
    return IntegralSpec(m, n);
}

/// Exact value of the shape sum_s c_s * zeta(s) / pi^(s-1) with odd s >= 3
/// and nonzero rational c_s. Zero coefficients are dropped on construction,
/// so structural equality is semantic equality.
class ZetaCombination {
public:
    ZetaCombination() = default;

    explicit ZetaCombination(std::map<int, Rational> terms) : terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0) {
                it = terms_.erase(it);
                continue;
            }
            if (it->first < 3 || it->first % 2 == 0)
                throw std::invalid_argument("zeta argument must be an odd integer >= 3 (got " +
                                            std::to_string(it->first) + ")");
            ++it;
        }
    }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    friend bool operator==(const ZetaCombination& a, const ZetaCombination& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<int, Rational> terms_;
};

}  // namespace tanhint
