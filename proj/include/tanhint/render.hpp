#pragma once

#include "tanhint/rational.hpp"
#include "tanhint/zeta_combination.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>

namespace tanhint {

/// Plain-text form, e.g. "56/3*zeta(3)/pi^2 - 124*zeta(5)/pi^4".
inline std::string render_text(const ZetaCombination& zc) {
    if (zc.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : zc.terms()) {
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        out += format_rational(abs(c)) + "*zeta(" + std::to_string(s) + ")/pi^" +
               std::to_string(s - 1);
        first = false;
    }
    return out;
}

/// LaTeX form with the zeta value in the numerator and the pi power (joined
/// by the coefficient's denominator, when any) below, terms ascending in s:
/// "\frac{56\,\zeta(3)}{3\,\pi^{2}} - \frac{124\,\zeta(5)}{\pi^{4}}".
inline std::string render_latex(const ZetaCombination& zc) {
    if (zc.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : zc.terms()) {
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        out += "\\frac{" + Int(abs(numerator(c))).str() + "\\,\\zeta(" + std::to_string(s) + ")}{";
        if (denominator(c) != 1) out += denominator(c).str() + "\\,";
        out += "\\pi^{" + std::to_string(s - 1) + "}}";
        first = false;
    }
    return out;
}

inline nlohmann::ordered_json json_object(const IntegralSpec& spec, const ZetaCombination& zc) {
    nlohmann::ordered_json j;
    j["m"] = spec.m();
    j["n"] = spec.n();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [s, c] : zc.terms())
        terms.push_back(nlohmann::ordered_json{{"s", s}, {"coeff", format_rational(c)}});
    j["terms"] = std::move(terms);
    return j;
}

/// Canonical single-line JSON: {"m":M,"n":N,"terms":[{"s":S,"coeff":"num/den"},...]}
/// with terms ascending in s and coefficients as exact strings. Emitting,
/// parsing and re-emitting is byte-stable.
inline std::string render_json(const IntegralSpec& spec, const ZetaCombination& zc) {
    return json_object(spec, zc).dump();
}

struct ParsedResult {
    IntegralSpec spec;
    ZetaCombination combination;
};

inline ParsedResult parse_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const IntegralSpec spec = validate_spec(j.at("m").get<int>(), j.at("n").get<int>());
    std::map<int, Rational> terms;
    for (const auto& t : j.at("terms"))
        terms[t.at("s").get<int>()] += parse_rational(t.at("coeff").get<std::string>());
    return ParsedResult{spec, ZetaCombination(std::move(terms))};
}

}  // namespace tanhint
