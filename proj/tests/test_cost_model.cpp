#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "respool/cost_model.hpp"
#include "respool/reward_model.hpp"
#include "test_util.hpp"

using namespace respool;
using test::rat;

namespace {

// The worked instance used throughout: x = [1/2, 1/4, 1/4], c = [5, 3, 4],
// d = [1, 2, 1].
ResourceUniverse worked_universe() {
    return ResourceUniverse::from_weights({rat(1, 2), rat(1, 4), rat(1, 4)});
}

OperatorLinearCost worked_cost() {
    return OperatorLinearCost{{rat(5), rat(3), rat(4)}, {rat(1), rat(2), rat(1)}};
}

}  // namespace

TEST_CASE("operator-linear cost evaluation") {
    const auto u = worked_universe();
    const CostModel model = worked_cost();
    CHECK(cost(model, u, OwnerSet{0}) == rat(11, 2));
    CHECK(cost(model, u, OwnerSet{0, 1}) == rat(4));
    CHECK(cost(model, u, OwnerSet{0, 1, 2}) == rat(17, 4));
    CHECK_THROWS_AS(cost(model, u, OwnerSet{}), EmptySet);

    // per-owner case: c({i}) = c_i + d_i * x_i
    for (OwnerId id = 0; id < 3; ++id)
        CHECK(cost(model, u, OwnerSet{id}) ==
              worked_cost().fixed[id] + worked_cost().marginal[id] * u.weight(id));

    CHECK(operating_owner(worked_cost(), OwnerSet{0, 1, 2}) == 1);
    CHECK(operating_owner(worked_cost(), OwnerSet{0, 2}) == 2);
}

TEST_CASE("tabulated cost evaluation") {
    const auto u = ResourceUniverse::from_weights({rat(1, 2), rat(1, 2)});
    TabulatedCost tab;
    tab.set(OwnerSet{0}, rat(1));
    tab.set(OwnerSet{0, 1}, rat(3));
    const CostModel model = tab;
    CHECK(cost(model, u, OwnerSet{0}) == 1);
    CHECK(cost(model, u, OwnerSet{0, 1}) == 3);
    CHECK_THROWS_AS(cost(model, u, OwnerSet{1}), UndefinedCost);
}

TEST_CASE("delta and the cost-efficiency condition") {
    CHECK(delta(OperatorLinearCost{{rat(0)}, {rat(1), rat(2), rat(1)}}) == 1);
    CHECK(delta(OperatorLinearCost{{rat(0)}, {rat(0), rat(0), rat(0)}}) == 0);
    CHECK(delta(OperatorLinearCost{{rat(0)}, {rat(3)}}) == 0);

    CHECK(satisfies_prop1_condition(worked_cost()));
    CHECK(!satisfies_prop1_condition(
        OperatorLinearCost{{rat(1), rat(1)}, {rat(0), rat(5)}}));
    // stake abstraction: all marginals zero
    CHECK(satisfies_prop1_condition(
        OperatorLinearCost{{rat(7), rat(2), rat(9)}, {rat(0), rat(0), rat(0)}}));
}

TEST_CASE("viability") {
    const auto u = worked_universe();
    const CostModel model = worked_cost();
    CHECK(is_viable(u.all_owners(), model, LinearReward{rat(10)}, u));
    CHECK(!is_viable(u.all_owners(), model, LinearReward{rat(4)}, u));

    TabulatedCost zero;
    zero.set(OwnerSet{0, 1, 2}, rat(0));
    CHECK(is_viable(u.all_owners(), CostModel{zero}, LinearReward{rat(0)}, u));
}

TEST_CASE("cost efficiency by subset enumeration") {
    const auto u = worked_universe();
    CHECK(is_cost_efficient(u.all_owners(), worked_cost(), u));
    // spot check one subset ratio from the enumeration
    CHECK(cost(CostModel{worked_cost()}, u, OwnerSet{1}) / u.measure(OwnerSet{1}) ==
          rat(14));

    const auto u2 = ResourceUniverse::from_weights({rat(1, 2), rat(1, 2)});
    const OperatorLinearCost bad{{rat(1), rat(1)}, {rat(0), rat(5)}};
    const auto witness = cost_inefficiency_witness(u2.all_owners(), bad, u2);
    REQUIRE(witness.has_value());
    CHECK(*witness == OwnerSet{0});

    CHECK(is_cost_efficient(OwnerSet{1}, worked_cost(), u));  // singleton

    CHECK_THROWS_AS(cost_inefficiency_witness(u.all_owners(), worked_cost(), u, 2),
                    SubsetLimitExceeded);
}

TEST_CASE("economies of scale") {
    const auto u = ResourceUniverse::from_weights({rat(1, 2), rat(1, 2)});

    TabulatedCost bad;
    bad.set(OwnerSet{0}, rat(1));
    bad.set(OwnerSet{1}, rat(1));
    bad.set(OwnerSet{0, 1}, rat(3));
    const auto witness = economies_of_scale_witness(bad, u);
    REQUIRE(witness.has_value());
    CHECK(witness->first == OwnerSet{0});
    CHECK(witness->second == OwnerSet{1});

    TabulatedCost boundary = bad;
    boundary.set(OwnerSet{0, 1}, rat(2));
    CHECK(!economies_of_scale_witness(boundary, u).has_value());
}

// Prop-1 soundness oracle: whenever delta <= min c_i, exhaustive subset
// enumeration must find the full universe cost efficient.
TEST_CASE("prop1 condition implies cost efficiency (randomized)") {
    SplitMix64 rng(7);
    int conditioned = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng.next() % 9;  // up to 10 owners
        const auto u = test::random_universe(rng, n);
        OperatorLinearCost model;
        for (std::size_t i = 0; i < n; ++i) {
            model.fixed.push_back(test::random_nonneg(rng, 10));
            model.marginal.push_back(test::random_nonneg(rng, 10));
        }
        if (!satisfies_prop1_condition(model)) continue;
        ++conditioned;
        CHECK(is_cost_efficient(u.all_owners(), model, u));
    }
    CHECK(conditioned > 10);
}

// Operator-linear costs with nonnegative fixed costs always satisfy
// economies of scale: min(a, b) <= a + b.
TEST_CASE("operator-linear costs have economies of scale (randomized)") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng.next() % 5;
        const auto u = test::random_universe(rng, n);
        OperatorLinearCost model;
        for (std::size_t i = 0; i < n; ++i) {
            model.fixed.push_back(test::random_nonneg(rng, 10));
            model.marginal.push_back(test::random_nonneg(rng, 10));
        }
        CHECK(!economies_of_scale_witness(model, u).has_value());
    }
}
