#pragma once
// Likelihood gambles: the recursive data model, likelihood normalization,
// construction from (model, evidence) pairs, and structural reduction.
//
// A gamble is either a constant utility in [0,1] or a finite, nonempty list of
// prospects (likelihood / reward gamble) whose largest likelihood is 1.
// Values are immutable once built; copies share their prospect storage.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace lgamble {

// Tolerance on the "max likelihood == 1" invariant of compound gambles.
inline constexpr double kNormalizationTolerance = 1e-12;

// Normalized likelihood of a model, in [0,1].
class Likelihood {
public:
    constexpr Likelihood() noexcept = default;
    explicit Likelihood(double value);

    [[nodiscard]] constexpr double value() const noexcept { return value_; }

    friend constexpr auto operator<=>(Likelihood, Likelihood) noexcept = default;

private:
    double value_ = 0.0;
};

// Likelihood of the compound model formed by two independent models.
[[nodiscard]] Likelihood compound_likelihood(Likelihood first, Likelihood second) noexcept;

struct Prospect;

class Gamble {
public:
    // Constant utility; throws DomainError unless 0 <= value <= 1.
    [[nodiscard]] static Gamble constant(double value);

    // Compound gamble; throws InvalidGambleError if `prospects` is empty or
    // the largest likelihood is not 1 within kNormalizationTolerance.
    [[nodiscard]] static Gamble compound(std::vector<Prospect> prospects);

    // Compound gamble whose likelihoods are rescaled by their maximum first.
    // Throws DegenerateEvidenceError if every likelihood is 0.
    [[nodiscard]] static Gamble normalized(std::vector<Prospect> prospects);

    [[nodiscard]] bool is_constant() const noexcept { return prospects_ == nullptr; }

    // Utility of a constant gamble. Throws std::logic_error on a compound.
    [[nodiscard]] double value() const;

    // Prospects of a compound gamble; empty for constants.
    [[nodiscard]] std::span<const Prospect> prospects() const noexcept;

private:
    Gamble() = default;

    double value_ = 0.0;
    std::shared_ptr<const std::vector<Prospect>> prospects_;
};

struct Prospect {
    Likelihood likelihood;
    Gamble reward;
};

// Outcome distribution of one model together with the payoff of an action.
class ModelSpec {
public:
    using OutcomeMap = std::map<std::string, double, std::less<>>;

    // Throws InvalidModelError unless probabilities are nonnegative and sum to
    // 1 within 1e-9, and every payoff lies in [0,1].
    ModelSpec(OutcomeMap probabilities, OutcomeMap payoff);

    [[nodiscard]] const OutcomeMap& probabilities() const noexcept { return probabilities_; }
    [[nodiscard]] const OutcomeMap& payoff() const noexcept { return payoff_; }

private:
    OutcomeMap probabilities_;
    OutcomeMap payoff_;
};

// Sum of payoff(y) * Pr(y). Throws InvalidModelError if an outcome with
// positive probability has no payoff.
[[nodiscard]] double expected_utility(const ModelSpec& model);

// Divides each entry by the exact maximum, so the largest output is exactly 1.
[[nodiscard]] std::vector<Likelihood> normalize_likelihoods(std::span<const double> raw);

// Gamble {normalized evidence_i / expected_utility(model_i)}.
[[nodiscard]] Gamble build_gamble(std::span<const ModelSpec> models,
                                  std::span<const double> evidence_probabilities);

// 0 for constants, 1 + deepest child otherwise.
[[nodiscard]] std::size_t depth(const Gamble& g);

// Reduces to depth <= 1 by multiplying nested likelihoods through, then merges
// prospects with equal rewards (keeping the larger likelihood) and sorts by
// likelihood descending, reward ascending. Constants are returned unchanged.
[[nodiscard]] Gamble flatten(const Gamble& g);

// Exact tree equality, including prospect order.
[[nodiscard]] bool structurally_equal(const Gamble& a, const Gamble& b) noexcept;

// Equality of flattened normal forms.
[[nodiscard]] bool operator==(const Gamble& a, const Gamble& b);

// Equality of flattened normal forms with likelihoods and rewards compared
// within `tolerance`.
[[nodiscard]] bool approx_equal(const Gamble& a, const Gamble& b, double tolerance);

// Compact notation, e.g. "{1/0.5, 0.8/0.4}".
[[nodiscard]] std::string to_string(const Gamble& g);

}  // namespace lgamble
