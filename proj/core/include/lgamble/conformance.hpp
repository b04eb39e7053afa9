#pragma once
// Random gamble generation and an executable conformance harness that checks
// the preference axioms and their consequences against a utility function.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lgamble/gamble.hpp"
#include "lgamble/utility.hpp"

namespace lgamble {

struct GenConfig {
    int max_depth = 3;
    int max_branching = 4;
    std::uint64_t seed = 0;
    std::size_t samples = 1000;

    // Throws DomainError unless 0 <= max_depth <= 6 and max_branching >= 1.
    void validate() const;
};

// Deterministic for a fixed config.seed. Constants are drawn from the
// lattice {0, 0.1, ..., 1}; each node's likelihoods are divided by their
// maximum so the largest is exactly 1.
[[nodiscard]] Gamble generate_gamble(const GenConfig& config);
[[nodiscard]] Gamble generate_gamble(const GenConfig& config, std::mt19937_64& rng);

using UtilityFunction = std::function<UtilityVector(const Gamble&, AmbiguityPremium)>;

struct Counterexample {
    std::uint64_t seed = 0;
    std::vector<Gamble> gambles;  // shrunk
    std::string detail;
};

struct PropertyResult {
    std::string property;
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::optional<Counterexample> counterexample;  // lowest failing sample
};

struct ConformanceReport {
    std::vector<PropertyResult> results;

    [[nodiscard]] bool all_passed() const noexcept;
    [[nodiscard]] std::size_t checks() const noexcept;
    [[nodiscard]] const PropertyResult* find(std::string_view property) const noexcept;
};

// Names of every property, in report order.
[[nodiscard]] std::vector<std::string> property_names();

// Runs config.samples instances of every property. A check that throws counts
// as a failure. samples == 0 yields an empty report.
[[nodiscard]] ConformanceReport run_conformance(const GenConfig& config, AmbiguityPremium c,
                                                const UtilityFunction& utility = utility_of_gamble);

// Same, restricted to the named properties.
[[nodiscard]] ConformanceReport run_conformance(const GenConfig& config, AmbiguityPremium c,
                                                const std::vector<std::string>& properties,
                                                const UtilityFunction& utility = utility_of_gamble);

// JSON array of {"property", "samples", "failures", "counterexample", ...}.
// "counterexample" is the first involved gamble or null; "seed", "gambles" and
// "detail" are added when a counterexample exists.
[[nodiscard]] std::string report_to_json(const ConformanceReport& report, int indent = -1);

}  // namespace lgamble
