#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "respool/reward_model.hpp"
#include "test_util.hpp"

using namespace respool;
using test::rat;

TEST_CASE("evaluation per family") {
    CHECK(evaluate(LinearReward{rat(10)}, rat(1, 2)) == 5);
    CHECK(evaluate(CappedReward{rat(10), rat(1, 2)}, rat(1)) == 5);
    CHECK(evaluate(CappedReward{rat(10), rat(1, 2)}, rat(1, 4)) == rat(5, 2));
    CHECK(evaluate(PowerConvexReward{rat(1), 2}, rat(1, 2)) == rat(1, 4));

    // every family vanishes at measure zero
    CHECK(evaluate(LinearReward{rat(10)}, rat(0)) == 0);
    CHECK(evaluate(CappedReward{rat(10), rat(1, 2)}, rat(0)) == 0);
    CHECK(evaluate(PowerConvexReward{rat(3), 4}, rat(0)) == 0);

    const TabulatedReward tab{{{rat(0), rat(0)}, {rat(1, 2), rat(3)}, {rat(1), rat(6)}}};
    CHECK(evaluate(tab, rat(0)) == 0);
    CHECK(evaluate(tab, rat(1, 2)) == 3);
    CHECK_THROWS_AS(evaluate(tab, rat(1, 3)), NotOnGrid);

    CHECK_THROWS_AS(evaluate(LinearReward{rat(1)}, rat(2)), MeasureOutOfRange);
    CHECK_THROWS_AS(evaluate(LinearReward{rat(1)}, rat(-1, 2)), MeasureOutOfRange);
}

TEST_CASE("sybil resilience") {
    const auto u = ResourceUniverse::from_weights({rat(1, 2), rat(1, 2)});
    CHECK(!check_sybil_resilience(LinearReward{rat(7)}, u).has_value());
    CHECK(!check_sybil_resilience(PowerConvexReward{rat(1), 2}, u).has_value());

    const auto witness = check_sybil_resilience(CappedReward{rat(10), rat(1, 2)}, u);
    REQUIRE(witness.has_value());
    CHECK(witness->axiom == Axiom::SybilResilience);
    CHECK(witness->lhs == 5);
    CHECK(witness->rhs == 10);
    CHECK(witness->first == OwnerSet{0});
    CHECK(witness->second == OwnerSet{1});
}

TEST_CASE("egalitarianism") {
    const auto u = ResourceUniverse::from_weights({rat(1, 2), rat(1, 2)});
    CHECK(!check_egalitarianism(LinearReward{rat(7)}, u).has_value());

    const auto witness = check_egalitarianism(PowerConvexReward{rat(1), 2}, u);
    REQUIRE(witness.has_value());
    CHECK(witness->lhs == 1);
    CHECK(witness->rhs == rat(1, 2));

    // capped is concave with rho(0) = 0, hence subadditive
    const auto u3 = ResourceUniverse::from_weights({rat(1, 2), rat(1, 4), rat(1, 4)});
    CHECK(!check_egalitarianism(CappedReward{rat(10), rat(1, 2)}, u3).has_value());
}

TEST_CASE("cauchy linearity on the rational grid") {
    CHECK(!check_cauchy_linearity(LinearReward{rat(7)}, 12).has_value());

    const auto witness = check_cauchy_linearity(CappedReward{rat(10), rat(1, 2)}, 4);
    REQUIRE(witness.has_value());
    CHECK(witness->k == 3);
    CHECK(witness->lhs == 5);
    CHECK(witness->rhs == rat(15, 2));

    const TabulatedReward proportional{{{rat(0), rat(0)}, {rat(1, 2), rat(3)}, {rat(1), rat(6)}}};
    CHECK(!check_cauchy_linearity(proportional, 2).has_value());
}

TEST_CASE("axiom pass implies grid linearity (uniform universes)") {
    const std::vector<RewardModel> models{
        LinearReward{rat(7)}, LinearReward{rat(0)}, CappedReward{rat(10), rat(1, 2)},
        CappedReward{rat(4), rat(1)}, PowerConvexReward{rat(1), 2},
        PowerConvexReward{rat(3), 3}};
    for (unsigned n = 2; n <= 8; ++n) {
        const auto u =
            ResourceUniverse::from_weights(std::vector<Rational>(n, Rational(1, n)));
        for (const auto& model : models) {
            const bool passes = !check_sybil_resilience(model, u).has_value() &&
                                !check_egalitarianism(model, u).has_value();
            if (passes) CHECK(!check_cauchy_linearity(model, n).has_value());
        }
    }
}

TEST_CASE("fair-share splitting") {
    const auto u = ResourceUniverse::from_weights({rat(1, 2), rat(1, 4), rat(1, 4)});
    const CostModel cost_model =
        OperatorLinearCost{{rat(5), rat(3), rat(4)}, {rat(1), rat(2), rat(1)}};
    const RewardModel reward = LinearReward{rat(10)};

    const auto shares =
        split_rewards(u.all_owners(), FairShare{}, u, cost_model, reward);
    CHECK(shares.at(0) == rat(23, 8));
    CHECK(shares.at(1) == rat(23, 16));
    CHECK(shares.at(2) == rat(23, 16));
    CHECK(shares.at(0) + shares.at(1) + shares.at(2) == rat(23, 4));

    // single-owner pool keeps the whole profit
    const auto solo = split_rewards(OwnerSet{0}, FairShare{}, u, cost_model, reward);
    CHECK(solo.at(0) == rat(10, 2) - rat(11, 2));
}

TEST_CASE("operator margin splitting") {
    const auto u = ResourceUniverse::from_weights({rat(1, 2), rat(1, 2)});
    TabulatedCost zero;
    zero.set(OwnerSet{0, 1}, rat(0));
    const RewardModel reward = LinearReward{rat(8)};

    // margin 0 degenerates to fair share
    const auto plain = split_rewards(u.all_owners(), OperatorMargin{0, rat(0)}, u,
                                     CostModel{zero}, reward);
    const auto fair = split_rewards(u.all_owners(), FairShare{}, u, CostModel{zero}, reward);
    CHECK(plain == fair);

    const auto skimmed = split_rewards(u.all_owners(), OperatorMargin{0, rat(1, 4)}, u,
                                       CostModel{zero}, reward);
    CHECK(skimmed.at(0) == rat(2) + rat(3));  // margin 2 plus half of 6
    CHECK(skimmed.at(1) == rat(3));
    CHECK(skimmed.at(0) + skimmed.at(1) == 8);
}

TEST_CASE("budget balance and fungibility (randomized)") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng.next() % 5;
        const auto u = test::random_universe(rng, n);
        OperatorLinearCost cost_model;
        for (std::size_t i = 0; i < n; ++i) {
            cost_model.fixed.push_back(test::random_nonneg(rng, 10));
            cost_model.marginal.push_back(test::random_nonneg(rng, 10));
        }
        // gamma may be too small to cover costs: negative profits still split
        const RewardModel reward = LinearReward{test::random_nonneg(rng, 6)};
        const OwnerSet pool(1 + rng.next() % ((1u << n) - 1));
        const auto shares = split_rewards(pool, FairShare{}, u, cost_model, reward);
        Rational total = 0;
        for (const auto& [id, share] : shares) total += share;
        CHECK(total == evaluate(reward, u.measure(pool)) -
                           cost(CostModel{cost_model}, u, pool));

        // fungibility: equal measure, equal reward
        const OwnerSet other(1 + rng.next() % ((1u << n) - 1));
        if (u.measure(other) == u.measure(pool))
            CHECK(evaluate(reward, u.measure(other)) == evaluate(reward, u.measure(pool)));
    }
}
