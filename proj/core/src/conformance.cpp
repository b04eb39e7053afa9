#include "lgamble/conformance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "json_codec.hpp"
#include "lgamble/error.hpp"

namespace lgamble {

namespace {

using Rng = std::mt19937_64;

constexpr double kUtilityTolerance = 1e-12;
constexpr double kRoundTripTolerance = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t base, std::size_t property, std::size_t sample) noexcept {
    return splitmix64(splitmix64(base ^ splitmix64(property)) + sample);
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double lattice_value(Rng& rng) { return uniform_int(rng, 0, 10) / 10.0; }

double draw_likelihood(Rng& rng) {
    const int kind = uniform_int(rng, 0, 9);
    if (kind == 0) return 0.0;
    if (kind == 1) return 1.0;
    return uniform01(rng);
}

// Normalized likelihood vector of the given size: raw draws divided by their max.
std::vector<double> draw_normalized(Rng& rng, std::size_t size) {
    std::vector<double> raw(size);
    for (auto& v : raw) v = draw_likelihood(rng);
    const double top = *std::max_element(raw.begin(), raw.end());
    if (top == 0.0) {
        raw[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(size) - 1))] = 1.0;
        return raw;
    }
    for (auto& v : raw) v /= top;
    return raw;
}

Gamble generate(const GenConfig& config, Rng& rng, int depth_left, bool root) {
    if (depth_left == 0 || (!root && uniform01(rng) < 0.3)) return Gamble::constant(lattice_value(rng));
    const auto size = static_cast<std::size_t>(uniform_int(rng, 1, config.max_branching));
    const auto likelihoods = draw_normalized(rng, size);
    std::vector<Prospect> prospects;
    prospects.reserve(size);
    for (double l : likelihoods) prospects.push_back({Likelihood(l), generate(config, rng, depth_left - 1, false)});
    return Gamble::compound(std::move(prospects));
}

// Wraps a constant as {1/x} so partition-style properties always see prospects.
Gamble as_compound(const Gamble& g) {
    if (!g.is_constant()) return g;
    return Gamble::compound({{Likelihood(1.0), g}});
}

Gamble pair_gamble(double a1, const Gamble& f, double a2, const Gamble& h) {
    return Gamble::compound({{Likelihood(a1), f}, {Likelihood(a2), h}});
}

// Random point on the top/right border.
UtilityVector draw_border_point(Rng& rng) {
    const double t = draw_likelihood(rng);
    return uniform01(rng) < 0.5 ? UtilityVector(1.0, t) : UtilityVector(t, 1.0);
}

std::weak_ordering reverse(std::weak_ordering o) {
    if (o == std::weak_ordering::less) return std::weak_ordering::greater;
    if (o == std::weak_ordering::greater) return std::weak_ordering::less;
    return o;
}

const char* symbol(std::weak_ordering o) {
    if (o == std::weak_ordering::less) return "<";
    if (o == std::weak_ordering::greater) return ">";
    return "=";
}

std::string describe(const UtilityVector& u) {
    std::ostringstream out;
    out.precision(17);
    out << '<' << u.alpha() << ", " << u.beta() << '>';
    return out.str();
}

ModelSpec draw_model(Rng& rng) {
    static const char* const kOutcomes[] = {"a", "b", "c"};
    ModelSpec::OutcomeMap probabilities, payoff;
    std::vector<double> weights(3);
    for (auto& w : weights) w = uniform01(rng) < 0.15 ? 0.0 : uniform01(rng);
    if (std::accumulate(weights.begin(), weights.end(), 0.0) == 0.0) weights[0] = 1.0;
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    for (std::size_t i = 0; i < 3; ++i) {
        probabilities.emplace(kOutcomes[i], weights[i] / total);
        payoff.emplace(kOutcomes[i], lattice_value(rng));
    }
    return {std::move(probabilities), std::move(payoff)};
}

std::vector<double> draw_evidence(Rng& rng, std::size_t size) {
    std::vector<double> evidence(size);
    for (auto& e : evidence) e = uniform01(rng) < 0.15 ? 0.0 : uniform01(rng);
    if (*std::max_element(evidence.begin(), evidence.end()) == 0.0) evidence[0] = 0.5;
    return evidence;
}

struct Instance {
    std::vector<Gamble> gambles;
    std::vector<double> scalars;
    std::vector<ModelSpec> models;
    std::vector<ModelSpec> alternative_models;
    std::vector<double> evidence;
};

struct Context {
    AmbiguityPremium c;
    const UtilityFunction& utility;

    [[nodiscard]] UtilityVector u(const Gamble& g) const { return utility(g, c); }
    [[nodiscard]] std::weak_ordering cmp(const Gamble& a, const Gamble& b) const { return compare(u(a), u(b)); }
    [[nodiscard]] double price(const Gamble& g) const { return price_of_utility(u(g), c); }
};

// Empty string on success, failure detail otherwise.
using Check = std::function<std::string(const Instance&, const Context&)>;
using Generate = std::function<Instance(Rng&, const GenConfig&)>;

struct Property {
    std::string name;
    Generate generate;
    Check check;
};

Generate gambles(std::size_t count, std::size_t scalar_count = 0) {
    return [count, scalar_count](Rng& rng, const GenConfig& config) {
        Instance inst;
        for (std::size_t i = 0; i < count; ++i) inst.gambles.push_back(generate_gamble(config, rng));
        for (std::size_t i = 0; i < scalar_count; ++i) inst.scalars.push_back(uniform01(rng));
        return inst;
    };
}

bool close(const UtilityVector& a, const UtilityVector& b, double tol) {
    return std::abs(a.alpha() - b.alpha()) <= tol && std::abs(a.beta() - b.beta()) <= tol;
}

std::string check_normalized(const Gamble& g) {
    if (g.is_constant()) return {};
    double top = 0.0;
    for (const auto& p : g.prospects()) {
        top = std::max(top, p.likelihood.value());
        if (auto bad = check_normalized(p.reward); !bad.empty()) return bad;
    }
    if (std::abs(top - 1.0) > kNormalizationTolerance) return "node " + to_string(g) + " has max likelihood != 1";
    return {};
}

std::vector<Property> all_properties() {
    std::vector<Property> props;

    props.push_back({"normalization", gambles(1), [](const Instance& in, const Context&) {
                         if (auto bad = check_normalized(in.gambles[0]); !bad.empty()) return bad;
                         return check_normalized(flatten(in.gambles[0]));
                     }});

    props.push_back({"flatten_depth", gambles(1), [](const Instance& in, const Context&) -> std::string {
                         const auto d = depth(flatten(in.gambles[0]));
                         if (d > 1) return "flattened depth " + std::to_string(d);
                         return {};
                     }});

    props.push_back({"flatten_idempotent", gambles(1), [](const Instance& in, const Context&) -> std::string {
                         const Gamble once = flatten(in.gambles[0]);
                         const Gamble twice = flatten(once);
                         if (!structurally_equal(once, twice)) return to_string(once) + " vs " + to_string(twice);
                         return {};
                     }});

    // Utility is invariant under flattening.
    props.push_back({"flatten_utility", gambles(1), [](const Instance& in, const Context& ctx) -> std::string {
                         const auto u = ctx.u(in.gambles[0]);
                         const auto v = ctx.u(flatten(in.gambles[0]));
                         if (!close(u, v, kUtilityTolerance)) return describe(u) + " vs flattened " + describe(v);
                         return {};
                     }});

    props.push_back({"zero_likelihood_inert", gambles(2), [](const Instance& in, const Context& ctx) -> std::string {
                         const Gamble g = as_compound(in.gambles[0]);
                         std::vector<Prospect> extended(g.prospects().begin(), g.prospects().end());
                         extended.push_back({Likelihood(0.0), in.gambles[1]});
                         const auto u = ctx.u(g);
                         const auto v = ctx.u(Gamble::compound(std::move(extended)));
                         if (u.pair() != v.pair()) return describe(u) + " vs " + describe(v);
                         return {};
                     }});

    // {a_1/f, ..., a_k/f} has the same utility as f, exactly.
    props.push_back({"repeated_reward",
                     [](Rng& rng, const GenConfig& config) {
                         Instance inst;
                         inst.gambles.push_back(generate_gamble(config, rng));
                         inst.scalars = draw_normalized(rng, static_cast<std::size_t>(uniform_int(rng, 1, 5)));
                         return inst;
                     },
                     [](const Instance& in, const Context& ctx) -> std::string {
                         std::vector<Prospect> copies;
                         for (double a : in.scalars) copies.push_back({Likelihood(a), in.gambles[0]});
                         const auto u = ctx.u(in.gambles[0]);
                         const auto v = ctx.u(Gamble::compound(std::move(copies)));
                         if (u.pair() != v.pair()) return describe(u) + " vs replicated " + describe(v);
                         return {};
                     }});

    // A subset of prospects may be grouped under one prospect.
    props.push_back({"partition_substitution", gambles(1, 8), [](const Instance& in, const Context& ctx) -> std::string {
                         const Gamble g = as_compound(in.gambles[0]);
                         const auto ps = g.prospects();
                         std::vector<Prospect> group, rest;
                         for (std::size_t i = 0; i < ps.size(); ++i) {
                             (in.scalars[i % in.scalars.size()] < 0.5 ? group : rest).push_back(ps[i]);
                         }
                         double top = 0.0;
                         for (const auto& p : group) top = std::max(top, p.likelihood.value());
                         if (group.empty() || top == 0.0) return {};
                         for (auto& p : group) p.likelihood = Likelihood(p.likelihood.value() / top);
                         rest.push_back({Likelihood(top), Gamble::compound(std::move(group))});
                         const auto u = ctx.u(g);
                         const auto v = ctx.u(Gamble::compound(std::move(rest)));
                         if (!close(u, v, kUtilityTolerance)) return describe(u) + " vs partitioned " + describe(v);
                         return {};
                     }});

    // 1 >= g >= 0, so prices stay in [0,1].
    props.push_back({"utility_bounds", gambles(1), [](const Instance& in, const Context& ctx) -> std::string {
                         const Gamble& g = in.gambles[0];
                         if (ctx.cmp(Gamble::constant(1.0), g) == std::weak_ordering::less) return "g > 1";
                         if (ctx.cmp(g, Gamble::constant(0.0)) == std::weak_ordering::less) return "g < 0";
                         const double v = ctx.price(g);
                         if (!(v >= 0.0 && v <= 1.0)) return "price " + std::to_string(v) + " outside [0,1]";
                         return {};
                     }});

    // Weak independence: f >= g implies {a1/f, a2/h} >= {a1/g, a2/h}.
    props.push_back({"weak_independence",
                     [](Rng& rng, const GenConfig& config) {
                         Instance inst = gambles(3)(rng, config);
                         inst.scalars = draw_normalized(rng, 2);
                         return inst;
                     },
                     [](const Instance& in, const Context& ctx) -> std::string {
                         const Gamble &f = in.gambles[0], &g = in.gambles[1], &h = in.gambles[2];
                         const double a1 = in.scalars[0], a2 = in.scalars[1];
                         const auto base = ctx.cmp(f, g);
                         const auto mixed = ctx.cmp(pair_gamble(a1, f, a2, h), pair_gamble(a1, g, a2, h));
                         if (base != std::weak_ordering::less && mixed == std::weak_ordering::less) {
                             return std::string("f ") + symbol(base) + " g but mixtures compare " + symbol(mixed);
                         }
                         if (base == std::weak_ordering::greater || base == std::weak_ordering::equivalent) return {};
                         if (mixed == std::weak_ordering::greater) {
                             return "f < g but mixtures compare >";
                         }
                         return {};
                     }});

    // Completeness (antisymmetric answers) and transitivity on triples.
    props.push_back({"transitivity", gambles(3), [](const Instance& in, const Context& ctx) -> std::string {
                         const Gamble &f = in.gambles[0], &g = in.gambles[1], &h = in.gambles[2];
                         const auto fg = ctx.cmp(f, g), gh = ctx.cmp(g, h), fh = ctx.cmp(f, h);
                         if (ctx.cmp(g, f) != reverse(fg)) return "compare(f,g) and compare(g,f) disagree";
                         const auto at_least = [](std::weak_ordering o) { return o != std::weak_ordering::less; };
                         if (at_least(fg) && at_least(gh) && !at_least(fh)) return "f >= g >= h but f < h";
                         if (!at_least(reverse(fg)) && !at_least(reverse(gh)) && at_least(reverse(fh))) {
                             return "f > g > h but not f > h";
                         }
                         return {};
                     }});

    // Archimedean property, checked constructively: exhibit likelihood vectors for f > g > h.
    props.push_back({"archimedean", gambles(3), [](const Instance& in, const Context& ctx) -> std::string {
                         std::vector<Gamble> sorted = in.gambles;
                         std::sort(sorted.begin(), sorted.end(), [&](const Gamble& a, const Gamble& b) {
                             return ctx.cmp(a, b) == std::weak_ordering::greater;
                         });
                         const Gamble &f = sorted[0], &g = sorted[1], &h = sorted[2];
                         if (ctx.cmp(f, g) != std::weak_ordering::greater ||
                             ctx.cmp(g, h) != std::weak_ordering::greater) {
                             return {};
                         }
                         std::vector<double> candidates;
                         for (double w = 1.0; w > 1e-18; w /= 2.0) candidates.push_back(w);
                         candidates.push_back(0.0);
                         bool above = false, below = false;
                         for (double w : candidates) {
                             if (!above && ctx.cmp(pair_gamble(1.0, f, w, h), g) == std::weak_ordering::greater) {
                                 above = true;
                             }
                             if (!below && ctx.cmp(g, pair_gamble(w, f, 1.0, h)) == std::weak_ordering::greater) {
                                 below = true;
                             }
                         }
                         if (!above) return "no {1/f, a/h} above g";
                         if (!below) return "no {b/f, 1/h} below g";
                         return {};
                     }});

    // Constants are ordered numerically, strictly for a finite premium.
    props.push_back({"constant_order",
                     [](Rng& rng, const GenConfig&) {
                         Instance inst;
                         for (int i = 0; i < 2; ++i) {
                             inst.scalars.push_back(uniform01(rng) < 0.5 ? lattice_value(rng) : uniform01(rng));
                         }
                         return inst;
                     },
                     [](const Instance& in, const Context& ctx) -> std::string {
                         const double x = in.scalars[0], y = in.scalars[1];
                         const auto got = ctx.cmp(Gamble::constant(x), Gamble::constant(y));
                         const auto want = x <=> y;
                         const bool ok = (want < 0 && got == std::weak_ordering::less) ||
                                         (want > 0 && got == std::weak_ordering::greater) ||
                                         (want == 0 && got == std::weak_ordering::equivalent);
                         if (!ok) {
                             std::ostringstream out;
                             out.precision(17);
                             out << "constants " << x << " vs " << y << " compare " << symbol(got);
                             return out.str();
                         }
                         return {};
                     }});

    // The order on the border is total and agrees with its componentwise definition.
    props.push_back({"compare_totality",
                     [](Rng& rng, const GenConfig&) {
                         Instance inst;
                         for (int i = 0; i < 2; ++i) {
                             const auto u = draw_border_point(rng);
                             inst.scalars.push_back(u.alpha());
                             inst.scalars.push_back(u.beta());
                         }
                         return inst;
                     },
                     [](const Instance& in, const Context&) -> std::string {
                         const UtilityVector u(in.scalars[0], in.scalars[1]), v(in.scalars[2], in.scalars[3]);
                         const auto uv = compare(u, v);
                         if (compare(v, u) != reverse(uv)) return "compare is not antisymmetric";
                         const bool dominates = u.alpha() >= v.alpha() && u.beta() <= v.beta();
                         const bool dominated = v.alpha() >= u.alpha() && v.beta() <= u.beta();
                         if (!dominates && !dominated) return describe(u) + " and " + describe(v) + " incomparable";
                         if (dominates && uv == std::weak_ordering::less) return describe(u) + " dominates but compares <";
                         if (dominated && uv == std::weak_ordering::greater) return describe(v) + " dominates but compares >";
                         return {};
                     }});

    // Canonical gambles are monotone in alpha and antitone in beta.
    props.push_back({"canonical_monotonicity",
                     [](Rng& rng, const GenConfig&) {
                         Instance inst;
                         const auto hi = draw_border_point(rng);
                         double a2 = 1.0, b2 = 1.0;
                         if (hi.alpha() == 1.0 && uniform01(rng) < 0.5) {
                             b2 = hi.beta() + (1.0 - hi.beta()) * uniform01(rng);
                         } else {
                             a2 = hi.beta() == 1.0 ? hi.alpha() * uniform01(rng) : uniform01(rng);
                         }
                         inst.scalars = {hi.alpha(), hi.beta(), a2, b2};
                         return inst;
                     },
                     [](const Instance& in, const Context& ctx) -> std::string {
                         const Gamble g1 = canonical_gamble(UtilityVector(in.scalars[0], in.scalars[1]));
                         const Gamble g2 = canonical_gamble(UtilityVector(in.scalars[2], in.scalars[3]));
                         if (!(in.scalars[0] >= in.scalars[2] && in.scalars[1] <= in.scalars[3])) return {};
                         if (ctx.cmp(g1, g2) == std::weak_ordering::less) return to_string(g1) + " < " + to_string(g2);
                         if (ctx.price(g1) < ctx.price(g2)) return "price decreased: " + to_string(g1) + " vs " + to_string(g2);
                         return {};
                     }});

    props.push_back({"price_round_trip",
                     [](Rng& rng, const GenConfig&) {
                         Instance inst;
                         const double x = uniform01(rng) < 0.5 ? uniform_int(rng, 1, 99) / 100.0
                                                               : std::max(uniform01(rng), 1e-6);
                         inst.scalars.push_back(x);
                         return inst;
                     },
                     [](const Instance& in, const Context& ctx) -> std::string {
                         const double x = in.scalars[0];
                         const double v = ctx.price(Gamble::constant(x));
                         if (std::abs(v - x) > kRoundTripTolerance) {
                             std::ostringstream out;
                             out.precision(17);
                             out << "price(" << x << ") = " << v;
                             return out.str();
                         }
                         return {};
                     }});

    // {alpha/1, beta/0} reproduces U(g) and its price.
    props.push_back({"canonical_equivalent", gambles(1), [](const Instance& in, const Context& ctx) -> std::string {
                         const auto u = ctx.u(in.gambles[0]);
                         const Gamble canonical = canonical_gamble(u);
                         const auto v = ctx.u(canonical);
                         if (!close(u, v, kUtilityTolerance)) return describe(u) + " vs canonical " + describe(v);
                         if (std::abs(ctx.price(canonical) - ctx.price(in.gambles[0])) > kUtilityTolerance) {
                             return "canonical price differs";
                         }
                         return {};
                     }});

    const Generate models_and_evidence = [](Rng& rng, const GenConfig&) {
        Instance inst;
        const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 4));
        for (std::size_t i = 0; i < n; ++i) inst.models.push_back(draw_model(rng));
        for (const auto& m : inst.models) {
            ModelSpec::OutcomeMap payoff;
            for (const auto& entry : m.payoff()) payoff.emplace(entry.first, lattice_value(rng));
            inst.alternative_models.emplace_back(m.probabilities(), std::move(payoff));
        }
        inst.evidence = draw_evidence(rng, n);
        inst.scalars = {std::exp(std::uniform_real_distribution<double>(-7.0, 7.0)(rng)),
                        std::ldexp(1.0, uniform_int(rng, -20, 20)), uniform01(rng)};
        return inst;
    };

    props.push_back({"evidence_exchangeability", models_and_evidence,
                     [](const Instance& in, const Context&) -> std::string {
                         const Gamble base = build_gamble(in.models, in.evidence);
                         for (double k : {in.scalars[0], in.scalars[1]}) {
                             std::vector<double> scaled = in.evidence;
                             for (auto& e : scaled) e *= k;
                             const Gamble other = build_gamble(in.models, scaled);
                             if (!approx_equal(base, other, kNormalizationTolerance)) {
                                 return to_string(base) + " vs scaled " + to_string(other);
                             }
                         }
                         // Power-of-two scaling is exact in binary floating point.
                         std::vector<double> doubled = in.evidence;
                         for (auto& e : doubled) e *= in.scalars[1];
                         if (!(base == build_gamble(in.models, doubled))) return "power-of-two scaling changed the gamble";
                         return {};
                     }});

    props.push_back({"model_exchangeability", models_and_evidence,
                     [](const Instance& in, const Context&) -> std::string {
                         std::vector<std::size_t> order(in.models.size());
                         std::iota(order.begin(), order.end(), std::size_t{0});
                         Rng shuffle_rng(static_cast<std::uint64_t>(in.scalars[2] * 1e15));
                         std::shuffle(order.begin(), order.end(), shuffle_rng);
                         std::vector<ModelSpec> models;
                         std::vector<double> evidence;
                         for (auto i : order) {
                             models.push_back(in.models[i]);
                             evidence.push_back(in.evidence[i]);
                         }
                         const Gamble a = build_gamble(in.models, in.evidence);
                         const Gamble b = build_gamble(models, evidence);
                         if (!(a == b)) return to_string(a) + " vs permuted " + to_string(b);
                         return {};
                     }});

    props.push_back({"evidence_scaling_preference", models_and_evidence,
                     [](const Instance& in, const Context& ctx) -> std::string {
                         std::vector<double> scaled = in.evidence;
                         for (auto& e : scaled) e *= in.scalars[1];
                         const auto before = ctx.cmp(build_gamble(in.models, in.evidence),
                                                     build_gamble(in.alternative_models, in.evidence));
                         const auto after = ctx.cmp(build_gamble(in.models, scaled),
                                                    build_gamble(in.alternative_models, scaled));
                         if (before != after) return std::string("preference flipped from ") + symbol(before) + " to " + symbol(after);
                         return {};
                     }});

    return props;
}

// Candidate reductions of g: each child in place of g, g minus one prospect,
// and g with one child reduced recursively.
std::vector<Gamble> shrink_candidates(const Gamble& g) {
    std::vector<Gamble> out;
    if (g.is_constant()) return out;
    const auto ps = g.prospects();
    for (const auto& p : ps) out.push_back(p.reward);
    if (ps.size() > 1) {
        for (std::size_t i = 0; i < ps.size(); ++i) {
            std::vector<Prospect> rest;
            for (std::size_t j = 0; j < ps.size(); ++j) {
                if (j != i) rest.push_back(ps[j]);
            }
            try {
                out.push_back(Gamble::normalized(std::move(rest)));
            } catch (const DegenerateEvidenceError&) {
            }
        }
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (auto& smaller : shrink_candidates(ps[i].reward)) {
            std::vector<Prospect> replaced(ps.begin(), ps.end());
            replaced[i].reward = std::move(smaller);
            out.push_back(Gamble::compound(std::move(replaced)));
        }
    }
    return out;
}

std::string run_check(const Property& prop, const Instance& inst, const Context& ctx) {
    try {
        return prop.check(inst, ctx);
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

// Greedy shrink: accept the first still-failing candidate until none fails.
Instance shrink(const Property& prop, Instance inst, std::string& detail, const Context& ctx) {
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t gi = 0; gi < inst.gambles.size() && !progress; ++gi) {
            for (auto& candidate : shrink_candidates(inst.gambles[gi])) {
                Instance trial = inst;
                trial.gambles[gi] = std::move(candidate);
                if (auto why = run_check(prop, trial, ctx); !why.empty()) {
                    inst = std::move(trial);
                    detail = std::move(why);
                    progress = true;
                    break;
                }
            }
        }
    }
    return inst;
}

}  // namespace

void GenConfig::validate() const {
    if (max_depth < 0 || max_depth > 6) throw DomainError("max_depth must lie in [0, 6]");
    if (max_branching < 1) throw DomainError("max_branching must be at least 1");
}

Gamble generate_gamble(const GenConfig& config) {
    Rng rng(config.seed);
    return generate_gamble(config, rng);
}

Gamble generate_gamble(const GenConfig& config, std::mt19937_64& rng) {
    config.validate();
    return generate(config, rng, config.max_depth, true);
}

bool ConformanceReport::all_passed() const noexcept {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.failures == 0; });
}

std::size_t ConformanceReport::checks() const noexcept {
    std::size_t total = 0;
    for (const auto& r : results) total += r.samples;
    return total;
}

const PropertyResult* ConformanceReport::find(std::string_view property) const noexcept {
    for (const auto& r : results) {
        if (r.property == property) return &r;
    }
    return nullptr;
}

std::vector<std::string> property_names() {
    std::vector<std::string> names;
    for (const auto& p : all_properties()) names.push_back(p.name);
    return names;
}

ConformanceReport run_conformance(const GenConfig& config, AmbiguityPremium c, const UtilityFunction& utility) {
    return run_conformance(config, c, property_names(), utility);
}

ConformanceReport run_conformance(const GenConfig& config, AmbiguityPremium c,
                                  const std::vector<std::string>& properties, const UtilityFunction& utility) {
    config.validate();
    ConformanceReport report;
    if (config.samples == 0) return report;

    const auto props = all_properties();
    const Context ctx{c, utility};
    for (const auto& wanted : properties) {
        auto it = std::find_if(props.begin(), props.end(), [&](const Property& p) { return p.name == wanted; });
        if (it == props.end()) throw DomainError("unknown property '" + wanted + "'");
        const auto index = static_cast<std::size_t>(it - props.begin());

        PropertyResult result{it->name, config.samples, 0, std::nullopt};
        for (std::size_t i = 0; i < config.samples; ++i) {
            const auto seed = sample_seed(config.seed, index, i);
            Rng rng(seed);
            Instance inst = it->generate(rng, config);
            auto why = run_check(*it, inst, ctx);
            if (why.empty()) continue;
            ++result.failures;
            if (!result.counterexample) {
                inst = shrink(*it, std::move(inst), why, ctx);
                result.counterexample = Counterexample{seed, std::move(inst.gambles), std::move(why)};
            }
        }
        report.results.push_back(std::move(result));
    }
    return report;
}

std::string report_to_json(const ConformanceReport& report, int indent) {
    using nlohmann::json;
    json out = json::array();
    for (const auto& r : report.results) {
        json entry{{"property", r.property}, {"samples", r.samples}, {"failures", r.failures}, {"counterexample", nullptr}};
        if (r.counterexample) {
            const auto& ce = *r.counterexample;
            json gambles = json::array();
            for (const auto& g : ce.gambles) gambles.push_back(detail::to_json_value(g));
            if (!ce.gambles.empty()) entry["counterexample"] = gambles.front();
            entry["seed"] = ce.seed;
            entry["gambles"] = std::move(gambles);
            entry["detail"] = ce.detail;
        }
        out.push_back(std::move(entry));
    }
    return out.dump(indent);
}

}  // namespace lgamble
