#pragma once
// Pricing a bet on the next toss of a coin with unknown bias after observing
// x successes in m tosses, over the continuous model family p in [0,1],
// alongside the posterior means under three noninformative priors.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lgamble/utility.hpp"

namespace lgamble {

class BinomialScenario {
public:
    // Throws DomainError unless m >= 1 and 0 <= x <= m.
    BinomialScenario(int trials, int successes, AmbiguityPremium premium = {});

    [[nodiscard]] int trials() const noexcept { return trials_; }
    [[nodiscard]] int successes() const noexcept { return successes_; }
    [[nodiscard]] AmbiguityPremium premium() const noexcept { return premium_; }
    [[nodiscard]] double mle() const noexcept { return static_cast<double>(successes_) / trials_; }

private:
    int trials_;
    int successes_;
    AmbiguityPremium premium_;
};

// log of p^x (1-p)^(m-x) / (p^x (1-p)^(m-x) at p = x/m), with 0^0 = 1.
[[nodiscard]] double log_normalized_binomial_likelihood(double p, const BinomialScenario& s);
[[nodiscard]] double normalized_binomial_likelihood(double p, const BinomialScenario& s);

// Which border coefficient an objective tracks: alpha (weight on reward 1)
// or beta (weight on reward 0).
enum class BorderSide { alpha, beta };

// log(l_p * a_p) or log(l_p * b_p), where <a_p, b_p> = canonical_of_value(p, c).
// Returns -infinity where the product is 0.
[[nodiscard]] double log_objective(double p, const BinomialScenario& s, BorderSide side);

struct OptimizerConfig {
    std::size_t grid_points = 10001;
    double bracket_width = 1e-10;
};

struct Maximum {
    double argmax = 0.0;
    double log_value = 0.0;
    [[nodiscard]] double value() const;
};

// Maximum over [0,1] by a uniform grid followed by golden-section refinement
// of the bracket around the best grid point.
[[nodiscard]] Maximum maximize_objective(const BinomialScenario& s, BorderSide side,
                                         const OptimizerConfig& config = {});

struct LikelihoodPricing {
    Maximum alpha;
    Maximum beta;
    double price = 0.0;
};

[[nodiscard]] LikelihoodPricing likelihood_pricing(const BinomialScenario& s,
                                                   const OptimizerConfig& config = {});
[[nodiscard]] double likelihood_price(const BinomialScenario& s);

// Posterior means: uniform (x+1)/(m+2), Jeffreys (x+0.5)/(m+1), Novick-Hall x/m.
struct BayesianPrices {
    double uniform = 0.0;
    double jeffreys = 0.0;
    double novick_hall = 0.0;
};

[[nodiscard]] BayesianPrices bayesian_prices(const BinomialScenario& s) noexcept;

struct PricingRow {
    int x = 0;
    double likelihood_price = 0.0;
    double uniform_prior = 0.0;
    double jeffreys_prior = 0.0;
    double novick_hall = 0.0;
};

[[nodiscard]] PricingRow pricing_row(const BinomialScenario& s);

// One row per x = 0..m.
[[nodiscard]] std::vector<PricingRow> emit_table(int trials, AmbiguityPremium c);

// Rounds half away from zero.
[[nodiscard]] double round_to(double v, int decimals) noexcept;

// Aligned text, four decimals per entry.
[[nodiscard]] std::string render_table_text(std::span<const PricingRow> rows);

// Header x,likelihood,uniform,jeffreys,novick_hall; full precision values.
[[nodiscard]] std::string render_table_csv(std::span<const PricingRow> rows);

}  // namespace lgamble
