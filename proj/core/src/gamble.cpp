#include "lgamble/gamble.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lgamble/error.hpp"

namespace lgamble {

namespace {

constexpr double kProbabilitySumTolerance = 1e-9;

bool in_unit_interval(double v) noexcept { return v >= 0.0 && v <= 1.0; }

std::string format_number(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, end) : std::to_string(v);
}

double max_likelihood(std::span<const Prospect> prospects) noexcept {
    double best = 0.0;
    for (const auto& p : prospects) best = std::max(best, p.likelihood.value());
    return best;
}

// Appends the depth-1 expansion of (scale, g) to `out`.
void expand(double scale, const Gamble& g, std::vector<Prospect>& out) {
    for (const auto& p : g.prospects()) {
        Likelihood combined = compound_likelihood(Likelihood(scale), p.likelihood);
        if (p.reward.is_constant()) {
            out.push_back({combined, p.reward});
        } else {
            expand(combined.value(), p.reward, out);
        }
    }
}

}  // namespace

Likelihood::Likelihood(double value) : value_(value) {
    if (!in_unit_interval(value)) {
        throw DomainError("likelihood must lie in [0,1], got " + format_number(value));
    }
}

Likelihood compound_likelihood(Likelihood first, Likelihood second) noexcept {
    return Likelihood(first.value() * second.value());
}

Gamble Gamble::constant(double value) {
    if (!in_unit_interval(value)) {
        throw DomainError("constant gamble must lie in [0,1], got " + format_number(value));
    }
    Gamble g;
    g.value_ = value;
    return g;
}

Gamble Gamble::compound(std::vector<Prospect> prospects) {
    if (prospects.empty()) throw InvalidGambleError("a compound gamble needs at least one prospect");
    const double top = max_likelihood(prospects);
    if (std::abs(top - 1.0) > kNormalizationTolerance) {
        throw InvalidGambleError("largest likelihood must be 1, got " + format_number(top));
    }
    Gamble g;
    g.prospects_ = std::make_shared<const std::vector<Prospect>>(std::move(prospects));
    return g;
}

Gamble Gamble::normalized(std::vector<Prospect> prospects) {
    if (prospects.empty()) throw InvalidGambleError("a compound gamble needs at least one prospect");
    const double top = max_likelihood(prospects);
    if (top <= 0.0) throw DegenerateEvidenceError("every prospect has likelihood 0");
    if (top != 1.0) {
        for (auto& p : prospects) p.likelihood = Likelihood(p.likelihood.value() / top);
    }
    return compound(std::move(prospects));
}

double Gamble::value() const {
    if (!is_constant()) throw std::logic_error("value() called on a compound gamble");
    return value_;
}

std::span<const Prospect> Gamble::prospects() const noexcept {
    if (!prospects_) return {};
    return {prospects_->data(), prospects_->size()};
}

ModelSpec::ModelSpec(OutcomeMap probabilities, OutcomeMap payoff)
    : probabilities_(std::move(probabilities)), payoff_(std::move(payoff)) {
    if (probabilities_.empty()) throw InvalidModelError("model has no outcomes");
    double total = 0.0;
    for (const auto& [outcome, pr] : probabilities_) {
        if (!(pr >= 0.0) || !std::isfinite(pr)) {
            throw InvalidModelError("probability of '" + outcome + "' is negative or not finite");
        }
        total += pr;
    }
    if (std::abs(total - 1.0) > kProbabilitySumTolerance) {
        throw InvalidModelError("probabilities sum to " + format_number(total) + ", not 1");
    }
    for (const auto& [outcome, u] : payoff_) {
        if (!in_unit_interval(u)) {
            throw InvalidModelError("payoff of '" + outcome + "' outside [0,1]");
        }
    }
}

double expected_utility(const ModelSpec& model) {
    double total = 0.0;
    for (const auto& [outcome, pr] : model.probabilities()) {
        if (pr == 0.0) continue;
        auto it = model.payoff().find(outcome);
        if (it == model.payoff().end()) {
            throw InvalidModelError("no payoff for outcome '" + outcome + "'");
        }
        total += pr * it->second;
    }
    // Probabilities may sum to 1 +- 1e-9.
    return std::clamp(total, 0.0, 1.0);
}

std::vector<Likelihood> normalize_likelihoods(std::span<const double> raw) {
    if (raw.empty()) throw DomainError("cannot normalize an empty likelihood list");
    double top = 0.0;
    for (double v : raw) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw DomainError("raw likelihoods must be finite and nonnegative");
        }
        top = std::max(top, v);
    }
    if (top == 0.0) throw DegenerateEvidenceError("evidence has probability 0 under every model");

    std::vector<Likelihood> out;
    out.reserve(raw.size());
    for (double v : raw) out.emplace_back(v / top);
    return out;
}

Gamble build_gamble(std::span<const ModelSpec> models, std::span<const double> evidence_probabilities) {
    if (models.empty() || models.size() != evidence_probabilities.size()) {
        throw DomainError("need one evidence probability per model and at least one model");
    }
    auto likelihoods = normalize_likelihoods(evidence_probabilities);
    std::vector<Prospect> prospects;
    prospects.reserve(models.size());
    for (std::size_t i = 0; i < models.size(); ++i) {
        prospects.push_back({likelihoods[i], Gamble::constant(expected_utility(models[i]))});
    }
    return Gamble::compound(std::move(prospects));
}

std::size_t depth(const Gamble& g) {
    std::size_t deepest = 0;
    for (const auto& p : g.prospects()) deepest = std::max(deepest, 1 + depth(p.reward));
    return deepest;
}

Gamble flatten(const Gamble& g) {
    if (g.is_constant()) return g;

    std::vector<Prospect> leaves;
    expand(1.0, g, leaves);

    std::sort(leaves.begin(), leaves.end(), [](const Prospect& a, const Prospect& b) {
        const double ra = a.reward.value(), rb = b.reward.value();
        if (ra != rb) return ra < rb;
        return a.likelihood > b.likelihood;
    });
    // After the sort each reward's first entry carries its largest likelihood.
    auto last = std::unique(leaves.begin(), leaves.end(), [](const Prospect& a, const Prospect& b) {
        return a.reward.value() == b.reward.value();
    });
    leaves.erase(last, leaves.end());
    std::stable_sort(leaves.begin(), leaves.end(),
                     [](const Prospect& a, const Prospect& b) { return a.likelihood > b.likelihood; });

    // Products of exact 1s stay exactly 1; inputs accepted within tolerance may not.
    return Gamble::normalized(std::move(leaves));
}

bool structurally_equal(const Gamble& a, const Gamble& b) noexcept {
    if (a.is_constant() != b.is_constant()) return false;
    if (a.is_constant()) return a.value() == b.value();
    auto pa = a.prospects(), pb = b.prospects();
    if (pa.size() != pb.size()) return false;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (pa[i].likelihood != pb[i].likelihood) return false;
        if (!structurally_equal(pa[i].reward, pb[i].reward)) return false;
    }
    return true;
}

bool operator==(const Gamble& a, const Gamble& b) {
    return structurally_equal(flatten(a), flatten(b));
}

bool approx_equal(const Gamble& a, const Gamble& b, double tolerance) {
    const Gamble fa = flatten(a), fb = flatten(b);
    if (fa.is_constant() != fb.is_constant()) return false;
    if (fa.is_constant()) return std::abs(fa.value() - fb.value()) <= tolerance;
    auto pa = fa.prospects(), pb = fb.prospects();
    if (pa.size() != pb.size()) return false;
    for (std::size_t i = 0; i < pa.size(); ++i) {
        if (std::abs(pa[i].likelihood.value() - pb[i].likelihood.value()) > tolerance) return false;
        if (std::abs(pa[i].reward.value() - pb[i].reward.value()) > tolerance) return false;
    }
    return true;
}

std::string to_string(const Gamble& g) {
    if (g.is_constant()) return format_number(g.value());
    std::string out = "{";
    bool first = true;
    for (const auto& p : g.prospects()) {
        if (!first) out += ", ";
        first = false;
        out += format_number(p.likelihood.value());
        out += '/';
        out += to_string(p.reward);
    }
    out += '}';
    return out;
}

}  // namespace lgamble
