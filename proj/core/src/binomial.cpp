#include "lgamble/binomial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "lgamble/error.hpp"

namespace lgamble {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// k * log(y) with 0 * log(0) = 0.
double xlogy(int k, double y) noexcept { return k == 0 ? 0.0 : k * std::log(y); }

double log_likelihood_unnormalized(double p, const BinomialScenario& s) noexcept {
    const int x = s.successes();
    const int rest = s.trials() - x;
    const double log_q = rest == 0 ? 0.0 : rest * std::log1p(-p);
    return xlogy(x, p) + log_q;
}

std::string shortest(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

}  // namespace

BinomialScenario::BinomialScenario(int trials, int successes, AmbiguityPremium premium)
    : trials_(trials), successes_(successes), premium_(premium) {
    if (trials < 1) throw DomainError("number of trials must be at least 1");
    if (successes < 0 || successes > trials) throw DomainError("successes must lie in [0, trials]");
}

double log_normalized_binomial_likelihood(double p, const BinomialScenario& s) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p outside [0,1]");
    const double value = log_likelihood_unnormalized(p, s) - log_likelihood_unnormalized(s.mle(), s);
    return std::min(value, 0.0);
}

double normalized_binomial_likelihood(double p, const BinomialScenario& s) {
    return std::exp(log_normalized_binomial_likelihood(p, s));
}

double log_objective(double p, const BinomialScenario& s, BorderSide side) {
    const double log_l = log_normalized_binomial_likelihood(p, s);
    // log of min(1, exp(+-(logit(p) - c))) is min(0, +-(logit(p) - c)).
    double shift;
    if (p == 0.0) {
        shift = kNegInf;
    } else if (p == 1.0) {
        shift = -kNegInf;
    } else {
        shift = std::log(p) - std::log1p(-p) - s.premium().value();
    }
    const double log_border = std::min(0.0, side == BorderSide::alpha ? shift : -shift);
    return log_l + log_border;
}

double Maximum::value() const { return std::exp(log_value); }

Maximum maximize_objective(const BinomialScenario& s, BorderSide side, const OptimizerConfig& config) {
    if (config.grid_points < 2) throw DomainError("optimizer grid needs at least two points");
    const auto last = config.grid_points - 1;
    const auto at = [&](std::size_t i) { return static_cast<double>(i) / static_cast<double>(last); };
    const auto f = [&](double p) { return log_objective(p, s, side); };

    Maximum best{0.0, f(0.0)};
    std::size_t best_index = 0;
    for (std::size_t i = 1; i <= last; ++i) {
        const double p = at(i);
        const double v = f(p);
        if (v > best.log_value) {
            best = {p, v};
            best_index = i;
        }
    }

    // Golden-section search over the two grid cells adjacent to the best point.
    double lo = at(best_index == 0 ? 0 : best_index - 1);
    double hi = at(std::min(best_index + 1, last));
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - inv_phi * (hi - lo);
    double b = lo + inv_phi * (hi - lo);
    double fa = f(a), fb = f(b);
    while (hi - lo > config.bracket_width) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
        }
    }
    for (double p : {a, b, 0.5 * (lo + hi)}) {
        const double v = f(p);
        if (v > best.log_value) best = {p, v};
    }
    return best;
}

LikelihoodPricing likelihood_pricing(const BinomialScenario& s, const OptimizerConfig& config) {
    LikelihoodPricing out;
    out.alpha = maximize_objective(s, BorderSide::alpha, config);
    out.beta = maximize_objective(s, BorderSide::beta, config);
    if (out.beta.log_value == kNegInf) {
        out.price = 1.0;
    } else if (out.alpha.log_value == kNegInf) {
        out.price = 0.0;
    } else {
        out.price = inverse_logit(out.alpha.log_value - out.beta.log_value + s.premium().value());
    }
    return out;
}

double likelihood_price(const BinomialScenario& s) { return likelihood_pricing(s).price; }

BayesianPrices bayesian_prices(const BinomialScenario& s) noexcept {
    const double x = s.successes();
    const double m = s.trials();
    return {(x + 1.0) / (m + 2.0), (x + 0.5) / (m + 1.0), x / m};
}

PricingRow pricing_row(const BinomialScenario& s) {
    const auto bayes = bayesian_prices(s);
    return {s.successes(), likelihood_price(s), bayes.uniform, bayes.jeffreys, bayes.novick_hall};
}

std::vector<PricingRow> emit_table(int trials, AmbiguityPremium c) {
    if (trials < 1) throw DomainError("number of trials must be at least 1");
    std::vector<PricingRow> rows;
    rows.reserve(static_cast<std::size_t>(trials) + 1);
    for (int x = 0; x <= trials; ++x) rows.push_back(pricing_row(BinomialScenario(trials, x, c)));
    return rows;
}

double round_to(double v, int decimals) noexcept {
    const double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

std::string render_table_text(std::span<const PricingRow> rows) {
    std::ostringstream out;
    out << std::setw(6) << "x" << std::setw(12) << "likelihood" << std::setw(10) << "uniform"
        << std::setw(10) << "jeffreys" << std::setw(13) << "novick_hall" << '\n';
    out << std::fixed << std::setprecision(4);
    for (const auto& r : rows) {
        out << std::setw(6) << r.x << std::setw(12) << round_to(r.likelihood_price, 4) << std::setw(10)
            << round_to(r.uniform_prior, 4) << std::setw(10) << round_to(r.jeffreys_prior, 4)
            << std::setw(13) << round_to(r.novick_hall, 4) << '\n';
    }
    return std::move(out).str();
}

std::string render_table_csv(std::span<const PricingRow> rows) {
    std::string out = "x,likelihood,uniform,jeffreys,novick_hall\n";
    for (const auto& r : rows) {
        out += std::to_string(r.x);
        for (double v : {r.likelihood_price, r.uniform_prior, r.jeffreys_prior, r.novick_hall}) {
            out += ',';
            out += shortest(v);
        }
        out += '\n';
    }
    return out;
}

}  // namespace lgamble
