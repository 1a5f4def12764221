#include "tanhint/closed_form.hpp"
#include "tanhint/numeric.hpp"
#include "tanhint/quadrature.hpp"
#include "tanhint/render.hpp"
#include "tanhint/residue_oracle.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <map>
#include <string>

namespace {

using namespace tanhint;

enum class OutputFormat { text, json, latex };

const std::map<std::string, OutputFormat> format_names = {
    {"text", OutputFormat::text},
    {"json", OutputFormat::json},
    {"latex", OutputFormat::latex},
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

int run_eval(int m, int n, OutputFormat format) {
    const IntegralSpec spec = validate_spec(m, n);
    const ZetaCombination result = theorem_sum(spec);
    switch (format) {
        case OutputFormat::text: std::printf("%s\n", render_text(result).c_str()); break;
        case OutputFormat::json: std::printf("%s\n", render_json(spec, result).c_str()); break;
        case OutputFormat::latex: std::printf("%s\n", render_latex(result).c_str()); break;
    }
    return 0;
}

int run_verify(int m, int n, int digits, double tolerance) {
    const IntegralSpec spec = validate_spec(m, n);
    const ZetaCombination theorem = theorem_sum(spec);
    const ZetaCombination oracle = oracle_closed_form(spec);
    const bool exact = theorem == oracle;
    const BigFloat value = eval_combination(theorem, digits);

    std::printf("J(%d,%d)\n", m, n);
    std::printf("  theorem_sum:       %s\n", render_text(theorem).c_str());
    std::printf("  residue_oracle:    %s\n", render_text(oracle).c_str());
    std::printf("  exact agreement:   %s\n", exact ? "yes" : "NO");
    std::printf("  value (%d digits): %s\n", digits, value.to_string().c_str());
    try {
        const QuadratureResult quad = quadrature(spec, tolerance);
        const double discrepancy = std::fabs(quad.value - value.to_double());
        std::printf("  quadrature:        %.15g (error bound %s)\n", quad.value,
                    sci(quad.error_bound).c_str());
        std::printf("  discrepancy:       %s (tolerance %s)\n", sci(discrepancy).c_str(),
                    sci(tolerance).c_str());
        const bool pass = exact && discrepancy <= tolerance;
        std::printf("%s\n", pass ? "PASS" : "FAIL");
        return pass ? 0 : 1;
    } catch (const ToleranceError& e) {
        std::printf("  quadrature:        unavailable (%s)\n", e.what());
        std::printf("FAIL\n");
        return 1;
    }
}

int run_table(int max_m, OutputFormat format, bool check, int digits, double tolerance) {
    if (max_m < 2)
        throw SpecError(SpecErrorKind::range, "--max-m must be at least 2, got " +
                                                  std::to_string(max_m));
    bool all_pass = true;
    auto rows = nlohmann::ordered_json::array();
    for (int m = 2; m <= max_m; ++m) {
        for (int n = (m % 2 == 0) ? 2 : 3; n <= m; n += 2) {
            const IntegralSpec spec = validate_spec(m, n);
            const ZetaCombination result = theorem_sum(spec);

            bool pass = true;
            double discrepancy = 0.0;
            if (check) {
                const bool exact = oracle_closed_form(spec) == result;
                const double value = eval_combination(result, digits).to_double();
                try {
                    discrepancy = std::fabs(quadrature(spec, tolerance).value - value);
                    pass = exact && discrepancy <= tolerance;
                } catch (const ToleranceError&) {
                    pass = false;
                }
                all_pass = all_pass && pass;
            }

            if (format == OutputFormat::json) {
                auto row = json_object(spec, result);
                if (check)
                    row["check"] = nlohmann::ordered_json{{"pass", pass},
                                                          {"discrepancy", discrepancy}};
                rows.push_back(std::move(row));
                continue;
            }
            const std::string expr =
                format == OutputFormat::latex ? render_latex(result) : render_text(result);
            std::string line = "J(" + std::to_string(m) + "," + std::to_string(n) + ") = " + expr;
            if (check)
                line += pass ? "  [PASS]" : "  [FAIL discrepancy=" + sci(discrepancy) + "]";
            std::printf("%s\n", line.c_str());
        }
    }
    if (format == OutputFormat::json) std::printf("%s\n", rows.dump().c_str());
    return (check && !all_pass) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact values of the integrals of tanh^m(z)/z^n over (0, inf)"};
    app.require_subcommand(1);

    int m = 0, n = 0, digits = 30, max_m = 0;
    double tolerance = 1e-10;
    OutputFormat format = OutputFormat::text;
    bool check = false;

    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
            ->default_str("text");
    };

    CLI::App* eval = app.add_subcommand("eval", "print the closed form of J(m,n)");
    eval->add_option("--m", m, "exponent of tanh")->required();
    eval->add_option("--n", n, "exponent of z")->required();
    add_format(eval);

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check the closed form against the residue route and quadrature");
    verify->add_option("--m", m, "exponent of tanh")->required();
    verify->add_option("--n", n, "exponent of z")->required();
    verify->add_option("--digits", digits, "decimal digits for the exact-side value")
        ->capture_default_str();
    verify->add_option("--tolerance", tolerance, "allowed |quadrature - exact|")
        ->capture_default_str();

    CLI::App* table =
        app.add_subcommand("table", "closed forms for every valid pair with n <= m <= max-m");
    table->add_option("--max-m", max_m, "largest tanh exponent")->required();
    add_format(table);
    table->add_flag("--check", check, "verify each row numerically");
    table->add_option("--digits", digits, "decimal digits for --check")->capture_default_str();
    table->add_option("--tolerance", tolerance, "tolerance for --check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval)) return run_eval(m, n, format);
        if (app.got_subcommand(verify)) return run_verify(m, n, digits, tolerance);
        return run_table(max_m, format, check, digits, tolerance);
    } catch (const SpecError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
