#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ars/claims.hpp"
#include "ars/semantics.hpp"
#include "ars/table_render.hpp"
#include "ars/verification.hpp"

namespace {

// 0 success, 1 verification failure, 2 usage/syntax, 3 semantic error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSemantic = 3;

struct UniverseSpec {
    std::string labels_text; // --universe 3,6,7,9
    ars::Int size = 0;       // --k 6
    CLI::Option* labels_opt = nullptr;
    CLI::Option* size_opt = nullptr;
};

ars::Int parse_integer(std::string_view token) {
    ars::Int value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
    }
    return value;
}

ars::Universe resolve_universe(const UniverseSpec& spec) {
    if (spec.labels_opt->count() > 0) {
        std::vector<ars::Int> labels;
        std::string_view rest = spec.labels_text;
        while (true) {
            const std::size_t comma = rest.find(',');
            labels.push_back(parse_integer(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        return ars::Universe(std::move(labels));
    }
    return ars::Universe::of_size(spec.size);
}

void add_universe_options(CLI::App* cmd, UniverseSpec& spec) {
    spec.labels_opt = cmd->add_option("--universe", spec.labels_text,
                                      "Comma-separated ascending labels, e.g. 3,6,7,9");
    spec.size_opt = cmd->add_option("--k", spec.size, "Universe of labels 1..k");
    spec.labels_opt->excludes(spec.size_opt);
    spec.size_opt->excludes(spec.labels_opt);
}

void require_universe(const UniverseSpec& spec) {
    if (spec.labels_opt->count() == 0 && spec.size_opt->count() == 0) {
        throw std::invalid_argument("one of --universe or --k is required");
    }
}

std::string combination_text(const ars::Combination& s) {
    if (s.exponent() == 0) return "-"; // the con0nation has no written form
    return ars::print(ars::full_form(s));
}

int run(int argc, char** argv) {
    CLI::App app{"Combinatorial sign language of numbered terms, classes and "
                 "quasi-fractions"};
    app.require_subcommand(1);

    UniverseSpec enum_spec;
    ars::Int class_number = 0;
    auto* cmd_enumerate =
        app.add_subcommand("enumerate", "List a class of combinations with place numbers");
    add_universe_options(cmd_enumerate, enum_spec);
    cmd_enumerate->add_option("--class", class_number, "Class number (exponent)")
        ->required();

    UniverseSpec decode_spec;
    std::string decode_text;
    auto* cmd_decode =
        app.add_subcommand("decode", "Resolve an expression to its full form");
    add_universe_options(cmd_decode, decode_spec);
    cmd_decode->add_option("expr", decode_text, "Expression, e.g. 1/2.9")->required();

    UniverseSpec forms_spec;
    std::string forms_text;
    auto* cmd_forms =
        app.add_subcommand("forms", "List every way of writing an expression's term");
    add_universe_options(cmd_forms, forms_spec);
    cmd_forms->add_option("expr", forms_text, "Expression, e.g. 3.6.9")->required();

    UniverseSpec table_spec;
    std::string format = "text";
    auto* cmd_table = app.add_subcommand("table", "Emit the k^2-sign language table");
    add_universe_options(cmd_table, table_spec);
    cmd_table->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    ars::Int k_max = 10;
    auto* cmd_verify =
        app.add_subcommand("verify", "Run the invariant suite and report pass/fail");
    cmd_verify->add_option("--k-max", k_max, "Largest universe size to check")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cmd_enumerate) {
            require_universe(enum_spec);
            const ars::Universe universe = resolve_universe(enum_spec);
            const auto combinations = ars::enumerate_class(universe, class_number);
            for (std::size_t i = 0; i < combinations.size(); ++i) {
                std::cout << '(' << i + 1 << ") " << combination_text(combinations[i])
                          << '\n';
            }
            return kExitOk;
        }

        if (*cmd_decode || *cmd_forms) {
            const UniverseSpec& spec = *cmd_decode ? decode_spec : forms_spec;
            const std::string& text = *cmd_decode ? decode_text : forms_text;
            require_universe(spec);
            const ars::Universe universe = resolve_universe(spec);

            ars::Expression expr;
            try {
                expr = ars::parse(text);
            } catch (const ars::SyntaxError& e) {
                std::cerr << "syntax error: " << e.what() << '\n';
                return kExitUsage;
            }
            try {
                const ars::Combination term = ars::decode(expr, universe);
                if (*cmd_decode) {
                    std::cout << ars::print(ars::full_form(term)) << '\n';
                } else {
                    for (const auto& form : ars::all_forms(term, universe)) {
                        std::cout << ars::print(form) << '\n';
                    }
                }
            } catch (const ars::SemanticError& e) {
                std::cerr << "semantic error: " << e.what() << '\n';
                return kExitSemantic;
            }
            return kExitOk;
        }

        if (*cmd_table) {
            require_universe(table_spec);
            const ars::Universe universe = resolve_universe(table_spec);
            const ars::LanguageTable table = ars::generate_language(universe);
            std::cout << (format == "json" ? ars::render_table_json(table)
                                           : ars::render_table_text(table));
            return kExitOk;
        }

        if (*cmd_verify) {
            if (k_max < 2) {
                std::cerr << "usage error: --k-max must be at least 2\n";
                return kExitUsage;
            }
            return ars::run_verification(k_max, std::cout) ? kExitOk : kExitVerifyFailed;
        }
    } catch (const ars::SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ars::SemanticError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
