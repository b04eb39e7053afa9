#include "lgamble/utility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lgamble/error.hpp"

namespace lgamble {

namespace {

LikelihoodPair utility_pair(const Gamble& g, AmbiguityPremium c) {
    if (g.is_constant()) return canonical_of_value(g.value(), c).pair();
    LikelihoodPair best;
    for (const auto& p : g.prospects()) {
        best = pointwise_max(best, utility_pair(p.reward, c).scaled(p.likelihood.value()));
    }
    return best;
}

}  // namespace

double logit(double z) {
    if (!(z >= 0.0 && z <= 1.0)) throw DomainError("logit argument outside [0,1]");
    if (z == 0.0 || z == 1.0) throw InfiniteLogitError("logit is infinite at 0 and 1");
    return std::log(z / (1.0 - z));
}

double inverse_logit(double t) noexcept {
    if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
    const double e = std::exp(t);
    return e / (1.0 + e);
}

AmbiguityPremium::AmbiguityPremium(double c) : c_(c) {
    if (!std::isfinite(c)) throw DomainError("ambiguity premium must be finite");
}

AmbiguityPremium AmbiguityPremium::from_prior(double rho) { return AmbiguityPremium(logit(rho)); }

LikelihoodPair pointwise_max(LikelihoodPair a, LikelihoodPair b) noexcept {
    return {std::max(a.alpha, b.alpha), std::max(a.beta, b.beta)};
}

UtilityVector::UtilityVector(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    const bool in_square = alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0;
    if (!in_square || std::abs(std::max(alpha, beta) - 1.0) > kVectorTolerance) {
        throw DomainError("utility vector <" + std::to_string(alpha) + ", " + std::to_string(beta) +
                          "> is not on the top/right border of the unit square");
    }
}

std::weak_ordering compare(const UtilityVector& u, const UtilityVector& v) {
    if (std::abs(u.alpha() - v.alpha()) <= kVectorTolerance &&
        std::abs(u.beta() - v.beta()) <= kVectorTolerance) {
        return std::weak_ordering::equivalent;
    }
    // On the border, alpha - beta increases monotonically along the order:
    // from -1 at <0,1> through 0 at <1,1> to 1 at <1,0>.
    const double position_u = u.alpha() - u.beta();
    const double position_v = v.alpha() - v.beta();
    return position_u > position_v ? std::weak_ordering::greater : std::weak_ordering::less;
}

UtilityVector canonical_of_value(double x, AmbiguityPremium c) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("value outside [0,1]");
    if (x == 0.0) return {0.0, 1.0};
    if (x == 1.0) return {1.0, 0.0};
    const double shift = logit(x) - c.value();
    return {std::min(1.0, std::exp(shift)), std::min(1.0, std::exp(-shift))};
}

UtilityVector utility_of_gamble(const Gamble& g, AmbiguityPremium c) {
    return UtilityVector(utility_pair(g, c));
}

double price_of_utility(const UtilityVector& u, AmbiguityPremium c) noexcept {
    if (u.beta() == 0.0) return 1.0;
    if (u.alpha() == 0.0) return 0.0;
    return inverse_logit(std::log(u.alpha() / u.beta()) + c.value());
}

double price(const Gamble& g, AmbiguityPremium c) { return price_of_utility(utility_of_gamble(g, c), c); }

std::weak_ordering prefer(const Gamble& first, const Gamble& second, AmbiguityPremium c) {
    return compare(utility_of_gamble(first, c), utility_of_gamble(second, c));
}

const char* to_string(AmbiguityAttitude attitude) noexcept {
    switch (attitude) {
        case AmbiguityAttitude::seeking: return "seeking";
        case AmbiguityAttitude::neutral: return "neutral";
        case AmbiguityAttitude::averse: return "averse";
    }
    return "unknown";
}

ImpliedPrior implied_prior(double observed_fair_price) {
    const double c = logit(observed_fair_price);
    AmbiguityAttitude attitude = AmbiguityAttitude::neutral;
    if (std::abs(c) > kVectorTolerance) attitude = c > 0.0 ? AmbiguityAttitude::seeking : AmbiguityAttitude::averse;
    return {observed_fair_price, AmbiguityPremium(c), attitude};
}

Gamble canonical_gamble(const UtilityVector& u) {
    return Gamble::compound({{Likelihood(u.alpha()), Gamble::constant(1.0)},
                             {Likelihood(u.beta()), Gamble::constant(0.0)}});
}

Gamble canonical_equivalent(const Gamble& g, AmbiguityPremium c) {
    return canonical_gamble(utility_of_gamble(g, c));
}

}  // namespace lgamble
