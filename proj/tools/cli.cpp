#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iomanip>
#include <map>
#include <sstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lgamble/binomial.hpp"
#include "lgamble/conformance.hpp"
#include "lgamble/error.hpp"
#include "lgamble/gamble.hpp"
#include "lgamble/gamble_json.hpp"
#include "lgamble/utility.hpp"

namespace lgamble::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct PremiumOptions {
    double c = 0.0;
    std::optional<double> rho;

    [[nodiscard]] AmbiguityPremium resolve() const {
        return rho ? AmbiguityPremium::from_prior(*rho) : AmbiguityPremium(c);
    }
};

void add_premium(CLI::App* cmd, PremiumOptions& premium) {
    auto* c = cmd->add_option("-c,--premium", premium.c, "Ambiguity premium c = logit(rho)");
    cmd->add_option("--rho", premium.rho, "Implicit prior rho in (0,1); sets c = logit(rho)")->excludes(c);
}

std::string fixed4(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << round_to(v, 4);
    return out.str();
}

const char* symbol(std::weak_ordering o) {
    if (o == std::weak_ordering::less) return "<";
    if (o == std::weak_ordering::greater) return ">";
    return "=";
}

json row_json(const PricingRow& r) {
    return {{"x", r.x},
            {"likelihood", r.likelihood_price},
            {"uniform", r.uniform_prior},
            {"jeffreys", r.jeffreys_prior},
            {"novick_hall", r.novick_hall}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Likelihood gambles: pricing, reduction, comparison and conformance checks"};
    app.require_subcommand(1);
    app.fallthrough();

    Format format = Format::text;
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    bool strict = false;
    app.add_flag("--strict", strict, "Reject gamble files whose likelihoods are not normalized");

    PremiumOptions premium;
    std::string file, second_file;

    auto* price_cmd = app.add_subcommand("price", "Fair price of a gamble");
    add_premium(price_cmd, premium);
    price_cmd->add_option("file", file, "Gamble JSON file")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "Flattened, merged normal form of a gamble");
    reduce_cmd->add_option("file", file, "Gamble JSON file")->required();

    auto* canonical_cmd = app.add_subcommand("canonical", "Equivalent canonical gamble {alpha/1, beta/0}");
    add_premium(canonical_cmd, premium);
    canonical_cmd->add_option("file", file, "Gamble JSON file")->required();

    auto* compare_cmd = app.add_subcommand("compare", "Preference between two gambles: >, = or <");
    add_premium(compare_cmd, premium);
    compare_cmd->add_option("first", file, "Gamble JSON file")->required();
    compare_cmd->add_option("second", second_file, "Gamble JSON file")->required();

    std::vector<std::string> model_files;
    std::vector<double> evidence;
    auto* build_cmd = app.add_subcommand("build", "Gamble from model files and evidence probabilities");
    build_cmd->add_option("models", model_files, "Model JSON files")->required();
    build_cmd->add_option("-e,--evidence", evidence, "Probability of the observed data under each model")
        ->required();

    int trials = 10;
    std::optional<int> successes;
    auto* binomial_cmd = app.add_subcommand("demo-binomial", "Bet on the next coin toss after m observed tosses");
    add_premium(binomial_cmd, premium);
    binomial_cmd->add_option("-m,--trials", trials, "Observed tosses m")->check(CLI::PositiveNumber);
    binomial_cmd->add_option("-x,--successes", successes, "Observed successes x; omit for the full table");

    GenConfig gen{5, 4, 0, 1000};
    auto* conformance_cmd = app.add_subcommand("conformance", "Run the axiom conformance suite");
    add_premium(conformance_cmd, premium);
    conformance_cmd->add_option("--samples", gen.samples, "Instances per property");
    conformance_cmd->add_option("--seed", gen.seed, "Base random seed");
    conformance_cmd->add_option("--max-depth", gen.max_depth, "Maximum gamble depth (0-6)");
    conformance_cmd->add_option("--max-branching", gen.max_branching, "Maximum prospects per node");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const LoadMode mode = strict ? LoadMode::strict : LoadMode::normalize;
    try {
        if (*price_cmd) {
            const auto c = premium.resolve();
            const Gamble g = read_gamble_file(file, mode);
            const auto u = utility_of_gamble(g, c);
            const double v = price_of_utility(u, c);
            if (format == Format::json) {
                out << json{{"price", v}, {"alpha", u.alpha()}, {"beta", u.beta()}}.dump() << '\n';
            } else {
                out << fixed4(v) << '\n';
            }
        } else if (*reduce_cmd) {
            out << gamble_to_json(flatten(read_gamble_file(file, mode))) << '\n';
        } else if (*canonical_cmd) {
            const Gamble g = canonical_equivalent(read_gamble_file(file, mode), premium.resolve());
            if (format == Format::json) {
                out << gamble_to_json(g) << '\n';
            } else {
                const auto ps = g.prospects();
                out << '{' << fixed4(ps[0].likelihood.value()) << "/1, " << fixed4(ps[1].likelihood.value())
                    << "/0}\n";
            }
        } else if (*compare_cmd) {
            const auto c = premium.resolve();
            const auto result = prefer(read_gamble_file(file, mode), read_gamble_file(second_file, mode), c);
            if (format == Format::json) {
                out << json{{"result", symbol(result)}}.dump() << '\n';
            } else {
                out << symbol(result) << '\n';
            }
        } else if (*build_cmd) {
            std::vector<ModelSpec> models;
            for (const auto& path : model_files) models.push_back(read_model_file(path));
            out << gamble_to_json(build_gamble(models, evidence)) << '\n';
        } else if (*binomial_cmd) {
            const auto c = premium.resolve();
            std::vector<PricingRow> rows;
            if (successes) {
                rows.push_back(pricing_row(BinomialScenario(trials, *successes, c)));
            } else {
                rows = emit_table(trials, c);
            }
            if (format == Format::json) {
                json list = json::array();
                for (const auto& r : rows) list.push_back(row_json(r));
                out << (successes ? list.front() : list).dump() << '\n';
            } else if (format == Format::csv) {
                out << render_table_csv(rows);
            } else {
                out << render_table_text(rows);
            }
        } else if (*conformance_cmd) {
            const auto report = run_conformance(gen, premium.resolve());
            if (format == Format::json) {
                out << report_to_json(report) << '\n';
            } else {
                for (const auto& r : report.results) {
                    out << std::left << std::setw(30) << r.property << std::right << std::setw(8) << r.samples
                        << std::setw(8) << r.failures << "  " << (r.failures == 0 ? "PASS" : "FAIL") << '\n';
                    if (r.counterexample) {
                        out << "    seed " << r.counterexample->seed << ": " << r.counterexample->detail << '\n';
                        for (const auto& g : r.counterexample->gambles) out << "    " << to_string(g) << '\n';
                    }
                }
            }
            return report.all_passed() ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "lgamble: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace lgamble::cli
