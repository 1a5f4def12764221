#include "tanhint/closed_form.hpp"

#include "golden.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

using namespace tanhint;

TEST_CASE("validate_spec accepts the family's domain") {
    const IntegralSpec s = validate_spec(4, 2);
    CHECK(s.m() == 4);
    CHECK(s.n() == 2);
    CHECK_NOTHROW(validate_spec(2, 2));
    CHECK_NOTHROW(validate_spec(13, 3));
}

TEST_CASE("validate_spec rejects each violation with its own kind") {
    try {
        validate_spec(3, 2);
        FAIL("parity violation not caught");
    } catch (const SpecError& e) {
        CHECK(e.kind() == SpecErrorKind::parity);
    }
    try {
        validate_spec(2, 4);
        FAIL("ordering violation not caught");
    } catch (const SpecError& e) {
        CHECK(e.kind() == SpecErrorKind::ordering);
    }
    try {
        validate_spec(3, 1);
        FAIL("range violation not caught");
    } catch (const SpecError& e) {
        CHECK(e.kind() == SpecErrorKind::range);
    }
}

TEST_CASE("zeta combinations are canonical") {
    CHECK(ZetaCombination({{3, Rational(0)}, {5, Rational(1)}}) ==
          ZetaCombination({{5, Rational(1)}}));
    CHECK(ZetaCombination().empty());
    CHECK_THROWS_AS(ZetaCombination({{4, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(ZetaCombination({{1, Rational(1)}}), std::invalid_argument);
}

TEST_CASE("theorem_sum reproduces every published value exactly") {
    for (const auto& entry : golden::corpus()) {
        const auto result = theorem_sum(validate_spec(entry.m, entry.n));
        INFO("J(" << entry.m << "," << entry.n << ")");
        CHECK(result == ZetaCombination(entry.terms));
    }
}

TEST_CASE("theorem_sum_with_bound") {
    CHECK(theorem_sum_with_bound(validate_spec(2, 2), 1) ==
          ZetaCombination({{3, Rational(14)}}));

    const ZetaCombination expected33({{3, Rational(-7)}, {5, Rational(186)}});
    CHECK(theorem_sum_with_bound(validate_spec(3, 3), 1) == expected33);
    CHECK(theorem_sum_with_bound(validate_spec(3, 3), 2) == expected33);

    CHECK(theorem_sum_with_bound(validate_spec(5, 3), 2) ==
          ZetaCombination({{3, Rational(-7)}, {5, Rational(310)}, {7, Rational(-1905)}}));

    CHECK_THROWS_AS(theorem_sum_with_bound(validate_spec(5, 3), 4), std::invalid_argument);
    CHECK_THROWS_AS(theorem_sum_with_bound(validate_spec(5, 3), 1), std::invalid_argument);
}

TEST_CASE("floor and ceiling half-m bounds agree for every valid spec, m <= 12") {
    for (int m = 2; m <= 12; ++m)
        for (int n = (m % 2 == 0) ? 2 : 3; n <= m; n += 2) {
            const IntegralSpec spec = validate_spec(m, n);
            INFO("J(" << m << "," << n << ")");
            CHECK(theorem_sum_with_bound(spec, m / 2) ==
                  theorem_sum_with_bound(spec, (m + 1) / 2));
        }
}

TEST_CASE("key support: odd keys between n and m+n-1 of the right shape") {
    for (int m = 2; m <= 12; ++m)
        for (int n = (m % 2 == 0) ? 2 : 3; n <= m; n += 2) {
            const auto result = theorem_sum(validate_spec(m, n));
            INFO("J(" << m << "," << n << ")");
            REQUIRE_FALSE(result.empty());
            for (const auto& [s, c] : result.terms()) {
                CHECK(s % 2 == 1);
                CHECK(s >= n);
                CHECK(s <= m + n - 1);
                CHECK((s - (n + ((m % 2 == 0) ? 1 : 0))) % 2 == 0);  // s = n+j-1, j ≡ m (mod 2)
            }
            // the top key always survives: its residue coefficient is
            // C(-n, m-1) times the kernel's unit constant term
            CHECK(result.terms().rbegin()->first == m + n - 1);
        }
}
