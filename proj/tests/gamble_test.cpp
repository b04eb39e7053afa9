#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lgamble/conformance.hpp"
#include "lgamble/error.hpp"
#include "lgamble/gamble.hpp"
#include "lgamble/utility.hpp"
#include "test_util.hpp"

namespace lgamble {
namespace {

using testing::C;
using testing::G;

ModelSpec coin(double head, double payoff_head, double payoff_tail) {
    return ModelSpec({{"head", head}, {"tail", 1.0 - head}}, {{"head", payoff_head}, {"tail", payoff_tail}});
}

TEST(ExpectedUtility, CoinTable) {
    EXPECT_DOUBLE_EQ(expected_utility(coin(0.5, 1, 0)), 0.5);
    EXPECT_DOUBLE_EQ(expected_utility(coin(0.4, 1, 0)), 0.4);
}

TEST(ExpectedUtility, ConstantPayoff) {
    const ModelSpec m({{"a", 0.1}, {"b", 0.7}, {"c", 0.2}}, {{"a", 0.3}, {"b", 0.3}, {"c", 0.3}});
    EXPECT_NEAR(expected_utility(m), 0.3, 1e-15);
}

TEST(ExpectedUtility, MissingPayoffForPositiveProbability) {
    const ModelSpec m({{"head", 0.5}, {"tail", 0.5}}, {{"head", 1.0}});
    EXPECT_THROW((void)expected_utility(m), InvalidModelError);
}

TEST(ExpectedUtility, MissingPayoffForImpossibleOutcomeIsFine) {
    const ModelSpec m({{"head", 1.0}, {"tail", 0.0}}, {{"head", 0.25}});
    EXPECT_DOUBLE_EQ(expected_utility(m), 0.25);
}

TEST(ModelSpec, RejectsMalformed) {
    EXPECT_THROW(ModelSpec({{"a", 0.6}, {"b", 0.6}}, {}), InvalidModelError);
    EXPECT_THROW(ModelSpec({{"a", -0.1}, {"b", 1.1}}, {}), InvalidModelError);
    EXPECT_THROW(ModelSpec({{"a", 1.0}}, {{"a", 1.5}}), InvalidModelError);
    EXPECT_THROW(ModelSpec({}, {}), InvalidModelError);
    EXPECT_NO_THROW(ModelSpec({{"a", 0.5 + 5e-10}, {"b", 0.5}}, {}));
}

TEST(NormalizeLikelihoods, Examples) {
    const std::vector<double> coins{0.5, 0.4};
    auto out = normalize_likelihoods(coins);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0].value(), 1.0);
    EXPECT_DOUBLE_EQ(out[1].value(), 0.8);

    const std::vector<double> single{0.2};
    EXPECT_EQ(normalize_likelihoods(single)[0].value(), 1.0);

    const std::vector<double> three{0.3, 0.15, 0.3};
    out = normalize_likelihoods(three);
    EXPECT_EQ(out[0].value(), 1.0);
    EXPECT_EQ(out[1].value(), 0.5);
    EXPECT_EQ(out[2].value(), 1.0);
}

TEST(NormalizeLikelihoods, Errors) {
    const std::vector<double> zeros{0.0, 0.0};
    EXPECT_THROW((void)normalize_likelihoods(zeros), DegenerateEvidenceError);
    EXPECT_THROW((void)normalize_likelihoods({}), DomainError);
    const std::vector<double> negative{0.5, -0.1};
    EXPECT_THROW((void)normalize_likelihoods(negative), DomainError);
}

TEST(BuildGamble, CoinExperimentsGiveTheSameGamble) {
    // Experiment 1: fair coin and a 4:6 coin, head observed, bet pays 1 on head.
    const std::vector<ModelSpec> first{coin(0.5, 1, 0), coin(0.4, 1, 0)};
    const std::vector<double> head{0.5, 0.4};
    // Experiment 2: double-tail coin and a 2:8 coin, tail observed, bet pays 0.5 on tail.
    const std::vector<ModelSpec> second{coin(0.0, 0, 0.5), coin(0.2, 0, 0.5)};
    const std::vector<double> tail{1.0, 0.8};

    const Gamble expected = G({{1.0, C(0.5)}, {0.8, C(0.4)}});
    const Gamble g1 = build_gamble(first, head);
    const Gamble g2 = build_gamble(second, tail);
    EXPECT_TRUE(g1 == expected) << to_string(g1);
    EXPECT_TRUE(g2 == expected) << to_string(g2);
    EXPECT_TRUE(structurally_equal(g1, g2));
}

TEST(BuildGamble, SingleModel) {
    const std::vector<ModelSpec> one{coin(0.3, 1, 0)};
    const std::vector<double> evidence{0.05};
    const Gamble g = build_gamble(one, evidence);
    ASSERT_EQ(g.prospects().size(), 1u);
    EXPECT_EQ(g.prospects()[0].likelihood.value(), 1.0);
    EXPECT_DOUBLE_EQ(g.prospects()[0].reward.value(), 0.3);
}

TEST(BuildGamble, Errors) {
    const std::vector<ModelSpec> one{coin(0.3, 1, 0)};
    const std::vector<double> two{0.1, 0.2};
    const std::vector<double> zero{0.0};
    EXPECT_THROW((void)build_gamble(one, two), DomainError);
    EXPECT_THROW((void)build_gamble(one, zero), DegenerateEvidenceError);
    EXPECT_THROW((void)build_gamble({}, {}), DomainError);
}

TEST(BuildGamble, DieEvidenceExchangeability) {
    // Observing "red" or "blue" on the four-face die carries the same information.
    const ModelSpec::OutcomeMap payoff{{"red", 1.0}, {"blue", 0.0}, {"green", 0.5}, {"yellow", 0.2}};
    const std::vector<ModelSpec> die{
        ModelSpec({{"red", 0.2}, {"blue", 0.1}, {"green", 0.3}, {"yellow", 0.4}}, payoff),
        ModelSpec({{"red", 0.3}, {"blue", 0.15}, {"green", 0.3}, {"yellow", 0.25}}, payoff)};
    const std::vector<double> red{0.2, 0.3};
    const std::vector<double> blue{0.1, 0.15};
    EXPECT_TRUE(build_gamble(die, red) == build_gamble(die, blue));
}

TEST(Gamble, ConstructionInvariants) {
    EXPECT_THROW((void)C(1.5), DomainError);
    EXPECT_THROW((void)C(-0.1), DomainError);
    EXPECT_THROW((void)Gamble::compound({}), InvalidGambleError);
    EXPECT_THROW((void)G({{0.9, C(0.5)}}), InvalidGambleError);
    EXPECT_NO_THROW((void)G({{1.0 - 1e-13, C(0.5)}}));
    EXPECT_THROW((void)Likelihood(1.2), DomainError);
}

TEST(Gamble, ZeroLikelihoodProspectsAreKept) {
    const Gamble g = G({{1.0, C(0.5)}, {0.0, C(0.9)}});
    EXPECT_EQ(g.prospects().size(), 2u);
}

TEST(Gamble, NormalizedRescales) {
    const Gamble g = Gamble::normalized({{Likelihood(0.5), C(0.2)}, {Likelihood(0.25), C(0.4)}});
    EXPECT_EQ(g.prospects()[0].likelihood.value(), 1.0);
    EXPECT_EQ(g.prospects()[1].likelihood.value(), 0.5);
    EXPECT_THROW((void)Gamble::normalized({{Likelihood(0.0), C(0.2)}}), DegenerateEvidenceError);
}

TEST(Depth, Examples) {
    EXPECT_EQ(depth(C(0.3)), 0u);
    EXPECT_EQ(depth(G({{1, C(0.3)}})), 1u);
    EXPECT_EQ(depth(G({{1, G({{1, C(0.2)}, {0.5, C(0.7)}})}, {0.4, C(0.1)}})), 2u);
}

TEST(CompoundLikelihood, Product) {
    EXPECT_DOUBLE_EQ(compound_likelihood(Likelihood(0.5), Likelihood(0.2)).value(), 0.1);
    EXPECT_EQ(compound_likelihood(Likelihood(1.0), Likelihood(0.37)).value(), 0.37);
    EXPECT_EQ(compound_likelihood(Likelihood(0.0), Likelihood(0.37)).value(), 0.0);
}

TEST(Flatten, MultipliesNestedLikelihoods) {
    const Gamble f = C(0.2), g = C(0.6), h = C(0.9);
    const Gamble nested = G({{1, G({{0.8, f}, {1, g}})}, {0.3, h}});
    const Gamble flat = flatten(nested);
    EXPECT_TRUE(structurally_equal(flat, G({{1, g}, {0.8, f}, {0.3, h}}))) << to_string(flat);
}

TEST(Flatten, MergesEqualRewards) {
    EXPECT_TRUE(structurally_equal(flatten(G({{1, C(0.7)}, {0.4, C(0.7)}})), G({{1, C(0.7)}})));
}

TEST(Flatten, ExpandsThenMerges) {
    const Gamble nested = G({{1, G({{1, C(1)}, {0.5, C(0)}})}, {0.2, C(0)}});
    const Gamble flat = flatten(nested);
    EXPECT_TRUE(structurally_equal(flat, G({{1, C(1)}, {0.5, C(0)}}))) << to_string(flat);
    const AmbiguityPremium c0;
    EXPECT_EQ(utility_of_gamble(flat, c0).pair(), utility_of_gamble(nested, c0).pair());
}

TEST(Flatten, ConstantIsUnchanged) { EXPECT_TRUE(structurally_equal(flatten(C(0.4)), C(0.4))); }

TEST(Flatten, RandomGamblesAreShallowAndIdempotent) {
    GenConfig config{5, 4, 0, 0};
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        config.seed = seed;
        const Gamble g = generate_gamble(config);
        const Gamble once = flatten(g);
        ASSERT_LE(depth(once), 1u) << to_string(g);
        ASSERT_TRUE(structurally_equal(flatten(once), once)) << to_string(g);
    }
}

TEST(GambleEquality, NormalFormIgnoresOrderAndNesting) {
    const Gamble a = G({{1, C(0.5)}, {0.8, C(0.4)}});
    const Gamble b = G({{0.8, C(0.4)}, {1, C(0.5)}});
    const Gamble c = G({{1, G({{1, C(0.5)}, {0.8, C(0.4)}})}});
    EXPECT_TRUE(a == b);
    EXPECT_TRUE(a == c);
    EXPECT_FALSE(structurally_equal(a, b));
    EXPECT_FALSE(a == G({{1, C(0.5)}, {0.7, C(0.4)}}));
    EXPECT_TRUE(approx_equal(a, G({{1, C(0.5)}, {0.8 + 1e-14, C(0.4)}}), 1e-12));
}

TEST(GambleEquality, ModelPermutationInvariance) {
    std::mt19937_64 rng(7);
    std::vector<ModelSpec> models{coin(0.1, 1, 0), coin(0.5, 0.3, 0.9), coin(0.8, 0.2, 0.6), coin(0.35, 1, 1)};
    std::vector<double> evidence{0.2, 0.05, 0.4, 0.4};
    const Gamble base = build_gamble(models, evidence);
    std::vector<std::size_t> order{0, 1, 2, 3};
    for (int trial = 0; trial < 20; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<ModelSpec> pm;
        std::vector<double> pe;
        for (auto i : order) {
            pm.push_back(models[i]);
            pe.push_back(evidence[i]);
        }
        EXPECT_TRUE(build_gamble(pm, pe) == base);
    }
}

TEST(GambleEquality, PowerOfTwoEvidenceScalingIsExact) {
    const std::vector<ModelSpec> models{coin(0.1, 1, 0), coin(0.5, 0.3, 0.9), coin(0.8, 0.2, 0.6)};
    const std::vector<double> evidence{0.3, 0.07, 0.11};
    for (double k : {0.125, 2.0, 1024.0}) {
        std::vector<double> scaled = evidence;
        for (auto& e : scaled) e *= k;
        EXPECT_TRUE(build_gamble(models, scaled) == build_gamble(models, evidence));
    }
}

TEST(ToString, CompactNotation) {
    EXPECT_EQ(to_string(G({{1, C(0.5)}, {0.8, C(0.4)}})), "{1/0.5, 0.8/0.4}");
    EXPECT_EQ(to_string(C(0.25)), "0.25");
}

}  // namespace
}  // namespace lgamble
