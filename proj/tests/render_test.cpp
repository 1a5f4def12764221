#include "tanhint/render.hpp"

#include "tanhint/closed_form.hpp"
#include "golden.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tanhint;

TEST_CASE("latex rendering") {
    CHECK(render_latex(theorem_sum(validate_spec(2, 2))) == "\\frac{14\\,\\zeta(3)}{\\pi^{2}}");
    CHECK(render_latex(theorem_sum(validate_spec(4, 2))) ==
          "\\frac{56\\,\\zeta(3)}{3\\,\\pi^{2}} - \\frac{124\\,\\zeta(5)}{\\pi^{4}}");
    CHECK(render_latex(theorem_sum(validate_spec(3, 3))) ==
          "-\\frac{7\\,\\zeta(3)}{\\pi^{2}} + \\frac{186\\,\\zeta(5)}{\\pi^{4}}");
    CHECK(render_latex(ZetaCombination()) == "0");
}

TEST_CASE("text rendering") {
    CHECK(render_text(theorem_sum(validate_spec(2, 2))) == "14*zeta(3)/pi^2");
    CHECK(render_text(theorem_sum(validate_spec(6, 4))) ==
          "-2852/15*zeta(5)/pi^4 + 5080*zeta(7)/pi^6 - 28616*zeta(9)/pi^8");
    CHECK(render_text(ZetaCombination()) == "0");
}

TEST_CASE("json rendering is canonical") {
    const IntegralSpec spec = validate_spec(6, 2);
    CHECK(render_json(spec, theorem_sum(spec)) ==
          R"({"m":6,"n":2,"terms":[{"s":3,"coeff":"322/15"},{"s":5,"coeff":"-248"},{"s":7,"coeff":"762"}]})");
}

TEST_CASE("json round-trips byte-identically over the golden corpus") {
    for (const auto& entry : golden::corpus()) {
        const IntegralSpec spec = validate_spec(entry.m, entry.n);
        const std::string once = render_json(spec, theorem_sum(spec));
        const ParsedResult parsed = parse_json(once);
        CHECK(parsed.spec.m() == entry.m);
        CHECK(parsed.combination == ZetaCombination(entry.terms));
        CHECK(render_json(parsed.spec, parsed.combination) == once);
    }
}

TEST_CASE("parsing canonicalizes foreign input") {
    const auto parsed =
        parse_json(R"({"m":2,"n":2,"terms":[{"s":3,"coeff":"28/2"}]})");
    CHECK(parsed.combination == ZetaCombination({{3, Rational(14)}}));
    CHECK(render_json(parsed.spec, parsed.combination) ==
          R"({"m":2,"n":2,"terms":[{"s":3,"coeff":"14"}]})");
    CHECK_THROWS_AS(parse_json(R"({"m":3,"n":2,"terms":[]})"), SpecError);
}
