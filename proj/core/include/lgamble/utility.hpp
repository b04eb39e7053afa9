#pragma once
// Two-dimensional utility of likelihood gambles and constant-premium pricing.
//
// Every gamble maps to a point <alpha, beta> on the top/right border of the
// unit square (max(alpha, beta) == 1). Such a point reads as the canonical
// gamble {alpha/1, beta/0}: the larger alpha relative to beta, the better.
// Constants are placed on the border by the decision maker's ambiguity
// premium c; compound gambles take the pointwise maximum of their
// likelihood-scaled children.

#include <compare>

#include "lgamble/gamble.hpp"

namespace lgamble {

// Tolerance for border membership and vector equality.
inline constexpr double kVectorTolerance = 1e-12;

// ln(z / (1 - z)). Throws InfiniteLogitError at z in {0, 1} and DomainError
// outside [0, 1].
[[nodiscard]] double logit(double z);

// 1 / (1 + exp(-t)), evaluated without overflow for large |t|.
[[nodiscard]] double inverse_logit(double t) noexcept;

// Decision maker's ambiguity premium c = logit(rho), rho being the price paid
// for a fair likelihood gamble.
class AmbiguityPremium {
public:
    constexpr AmbiguityPremium() noexcept = default;
    // Throws DomainError if `c` is not finite.
    explicit AmbiguityPremium(double c);

    // Premium implied by a fair-gamble price rho in (0, 1).
    [[nodiscard]] static AmbiguityPremium from_prior(double rho);

    [[nodiscard]] constexpr double value() const noexcept { return c_; }
    [[nodiscard]] double implicit_prior() const noexcept { return inverse_logit(c_); }

    friend constexpr auto operator<=>(AmbiguityPremium, AmbiguityPremium) noexcept = default;

private:
    double c_ = 0.0;
};

// Pair of nonnegative coefficients without the border constraint; the
// intermediate value of likelihood scaling and pointwise maxima.
struct LikelihoodPair {
    double alpha = 0.0;
    double beta = 0.0;

    [[nodiscard]] constexpr LikelihoodPair scaled(double gamma) const noexcept {
        return {gamma * alpha, gamma * beta};
    }
    friend constexpr bool operator==(LikelihoodPair, LikelihoodPair) noexcept = default;
};

[[nodiscard]] LikelihoodPair pointwise_max(LikelihoodPair a, LikelihoodPair b) noexcept;

class UtilityVector {
public:
    // Throws DomainError unless both components lie in [0,1] and the larger
    // one is 1 within kVectorTolerance.
    UtilityVector(double alpha, double beta);
    explicit UtilityVector(LikelihoodPair pair) : UtilityVector(pair.alpha, pair.beta) {}

    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] double beta() const noexcept { return beta_; }
    [[nodiscard]] LikelihoodPair pair() const noexcept { return {alpha_, beta_}; }

private:
    double alpha_;
    double beta_;
};

// Total order on the border: u >= v iff u.alpha >= v.alpha and u.beta <= v.beta.
// Components equal within kVectorTolerance compare equivalent.
[[nodiscard]] std::weak_ordering compare(const UtilityVector& u, const UtilityVector& v);

// Border point of a constant x under premium c:
// <min(1, e^(logit(x) - c)), min(1, e^(c - logit(x)))>, with the limits
// <0,1> at x = 0 and <1,0> at x = 1. Throws DomainError outside [0,1].
[[nodiscard]] UtilityVector canonical_of_value(double x, AmbiguityPremium c);

[[nodiscard]] UtilityVector utility_of_gamble(const Gamble& g, AmbiguityPremium c);

// Fair price of a gamble with utility `u`: inverse_logit(ln(alpha/beta) + c),
// exactly 1 when beta == 0 and exactly 0 when alpha == 0.
[[nodiscard]] double price_of_utility(const UtilityVector& u, AmbiguityPremium c) noexcept;

[[nodiscard]] double price(const Gamble& g, AmbiguityPremium c);

[[nodiscard]] std::weak_ordering prefer(const Gamble& first, const Gamble& second, AmbiguityPremium c);

enum class AmbiguityAttitude { seeking, neutral, averse };

[[nodiscard]] const char* to_string(AmbiguityAttitude attitude) noexcept;

struct ImpliedPrior {
    double rho;
    AmbiguityPremium premium;
    AmbiguityAttitude attitude;
};

// Premium and attitude revealed by the price paid for a fair gamble.
// Throws InfiniteLogitError for prices 0 or 1.
[[nodiscard]] ImpliedPrior implied_prior(double observed_fair_price);

// The canonical gamble {alpha/1, beta/0}.
[[nodiscard]] Gamble canonical_gamble(const UtilityVector& u);

// {alpha/1, beta/0} with <alpha, beta> = utility_of_gamble(g, c).
[[nodiscard]] Gamble canonical_equivalent(const Gamble& g, AmbiguityPremium c);

}  // namespace lgamble
