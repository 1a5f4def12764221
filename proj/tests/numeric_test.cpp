#include "tanhint/numeric.hpp"

#include "tanhint/closed_form.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

using namespace tanhint;

TEST_CASE("zeta(3) matches the brute-force summation oracle to 1e-15") {
    const double engine = zeta_odd(3, 20).to_double();
    CHECK(std::fabs(engine - oracles::zeta_bruteforce(3)) <= 1e-15);
    CHECK(std::fabs(engine - 1.202056903159594) <= 1e-15);
}

TEST_CASE("zeta approaches 1 for large arguments") {
    const double z25 = zeta_odd(25, 20).to_double();
    CHECK(z25 > 1.0);
    CHECK(z25 < 1.00000003);
}

TEST_CASE("zeta rejects divergent and even arguments") {
    CHECK_THROWS_AS(zeta_odd(1, 15), std::domain_error);
    CHECK_THROWS_AS(zeta_odd(0, 15), std::domain_error);
    CHECK_THROWS_AS(zeta_odd(4, 15), std::domain_error);
}

TEST_CASE("pi matches an independent arctan decomposition to 1e-15") {
    CHECK(std::fabs(pi_digits(20).to_double() - oracles::pi_bruteforce()) <= 1e-15);
    CHECK(std::fabs(pi_digits(15).to_double() - 3.14159265358979) <= 1e-14);
    CHECK(pi_digits(15).to_string() == "3.14159265358979");
    CHECK(std::fabs(pi_digits(1).to_double() - 3.14159265358979) <= 1.0);  // error <= 10^(1-D)
}

TEST_CASE("zeta and pi refine monotonically with the digit count") {
    // already-guaranteed digits never change when precision increases
    const Rational pi15 = pi_digits(15).value();
    const Rational pi50 = pi_digits(50).value();
    CHECK(abs(pi15 - pi50) <= make_rational(2, pow10(15)));

    const Rational z10 = zeta_odd(5, 10).value();
    const Rational z30 = zeta_odd(5, 30).value();
    const Rational z50 = zeta_odd(5, 50).value();
    CHECK(abs(z10 - z30) <= make_rational(2, pow10(10)));
    CHECK(abs(z30 - z50) <= make_rational(2, pow10(30)));
}

TEST_CASE("high-precision zeta agrees with itself across parameter regimes") {
    // the Euler-Maclaurin cutoff N doubles when needed; force both regimes
    const Rational a = detail::zeta_rational(3, 12);
    const Rational b = detail::zeta_rational(3, 60);
    CHECK(abs(a - b) <= make_rational(2, pow10(12)));
}

TEST_CASE("eval_combination") {
    // J(2,2) = 14*zeta(3)/pi^2 = 1.7051135952700231636940857063847...
    // (value pinned by both numeric oracles; see also the quadrature suite)
    const BigFloat v = eval_combination(ZetaCombination({{3, Rational(14)}}), 12);
    CHECK(std::fabs(v.to_double() - 1.705113595270023) <= 1e-12);

    const BigFloat w = eval_combination(ZetaCombination({{3, Rational(14)}}), 30);
    CHECK(abs(w.value() - make_rational(Int("1705113595270023163694085706385"),
                                        pow10(30))) <= make_rational(2, pow10(30)));

    CHECK(eval_combination(ZetaCombination(), 15).to_double() == 0.0);

    const double direct = 14.0 * oracles::zeta_bruteforce(3) /
                          (oracles::pi_bruteforce() * oracles::pi_bruteforce());
    CHECK(std::fabs(v.to_double() - direct) <= 1e-14);
}

TEST_CASE("eval_combination handles large coefficients within budget") {
    // J(7,7): coefficients up to ~7.5 million must not eat the precision
    const ZetaCombination j77 = theorem_sum(validate_spec(7, 7));
    const Rational a = eval_combination(j77, 20).value();
    const Rational b = eval_combination(j77, 45).value();
    CHECK(abs(a - b) <= make_rational(2, pow10(20)));
}

TEST_CASE("bigfloat rendering") {
    CHECK(BigFloat::from_rational(Rational(0), 10).to_string() == "0");
    CHECK(BigFloat::from_rational(Rational(1, 4), 10).to_string() == "0.25");
    CHECK(BigFloat::from_rational(Rational(-1, 8), 10).to_string() == "-0.125");
    CHECK(BigFloat::from_rational(Rational(120), 5).to_string() == "120");
    CHECK(BigFloat::from_rational(Rational(1, 3), 6).to_string() == "0.333333");
    // carry propagation at the significant-digit boundary
    CHECK(BigFloat::from_rational(make_rational(9999995, 10000000), 10).to_string(6) == "1");
    CHECK(BigFloat::from_rational(make_rational(2999995, 1000000), 10).to_string(6) == "3");
    CHECK(BigFloat::from_rational(make_rational(1, 1000), 8).to_string() == "0.001");
}

TEST_CASE("bernoulli numbers") {
    std::vector<Rational> cache;
    CHECK(detail::bernoulli_at(cache, 0) == 1);
    CHECK(detail::bernoulli_at(cache, 1) == make_rational(-1, 2));
    CHECK(detail::bernoulli_at(cache, 2) == Rational(1, 6));
    CHECK(detail::bernoulli_at(cache, 4) == make_rational(-1, 30));
    CHECK(detail::bernoulli_at(cache, 12) == make_rational(-691, 2730));
    CHECK(detail::bernoulli_at(cache, 3) == 0);
    CHECK(detail::bernoulli_at(cache, 13) == 0);
}
