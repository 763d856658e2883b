#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "respool/blueprint.hpp"
#include "test_util.hpp"

using namespace respool;
using test::rat;

namespace {

Scenario two_pool_scenario(Epoch epochs = 10) {
    Scenario s{
        Instance{ResourceUniverse::from_weights({rat(1, 4), rat(1, 4), rat(1, 2)}),
                 OperatorLinearCost{{rat(0), rat(0), rat(0)}, {rat(0), rat(0), rat(0)}},
                 LinearReward{rat(0)}},
        PoolingConfiguration{{Pool{OwnerSet{0, 1}}, Pool{OwnerSet{2}}}},
        2,
        epochs,
        HalvingSchedule{rat(50), 10},
        rat(0),
        rat(50),
        {rat(1), rat(1, 2)},
        7};
    return s;
}

}  // namespace

TEST_CASE("committee selection basics") {
    const std::vector<std::pair<std::size_t, Rational>> stakes{
        {0, rat(1, 2)}, {1, rat(3, 10)}, {2, rat(1, 5)}};
    CHECK(select_committee(stakes, 3, 1) == std::vector<std::size_t>{0, 1, 2});
    CHECK(select_committee(stakes, 1, 1) == select_committee(stakes, 1, 1));

    const std::vector<std::pair<std::size_t, Rational>> with_zero{
        {0, rat(1, 2)}, {1, rat(1, 2)}, {2, rat(0)}};
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        for (std::size_t p : select_committee(with_zero, 1, seed)) CHECK(p != 2);
    CHECK_THROWS_AS(select_committee(with_zero, 3, 0), KTooLarge);
}

TEST_CASE("selection frequency tracks stake") {
    const std::vector<std::pair<std::size_t, Rational>> stakes{
        {0, rat(1, 2)}, {1, rat(3, 10)}, {2, rat(1, 5)}};
    std::vector<int> hits(3, 0);
    const int trials = 20000;
    for (int t = 0; t < trials; ++t)
        ++hits[select_committee(stakes, 1, static_cast<std::uint64_t>(t)).front()];
    CHECK(std::abs(hits[0] / double(trials) - 0.5) < 0.02);
    CHECK(std::abs(hits[1] / double(trials) - 0.3) < 0.02);
    CHECK(std::abs(hits[2] / double(trials) - 0.2) < 0.02);
}

TEST_CASE("epoch distribution") {
    auto s = two_pool_scenario();

    SUBCASE("single pool committee with full performance gets everything") {
        s.performance = {rat(1), rat(1)};
        const auto record = distribute_epoch(s, 0, {1});
        CHECK(record.pool_rewards.at(1) == record.pot.distributable);
        CHECK(record.shortfall == 0);
    }

    SUBCASE("zero performance forfeits to the treasury") {
        s.performance = {rat(0), rat(1)};
        const auto record = distribute_epoch(s, 0, {0, 1});
        CHECK(record.pool_rewards.at(0) == 0);
        CHECK(record.shortfall == record.pot.distributable * rat(1, 2));
    }

    SUBCASE("performance scales committee-share baselines") {
        // equal-stake pools, distributable 100, factors [1, 1/2]
        Scenario eq{s};
        eq.instance.universe =
            ResourceUniverse::from_weights({rat(1, 2), rat(1, 2)});
        eq.instance.cost =
            OperatorLinearCost{{rat(0), rat(0)}, {rat(0), rat(0)}};
        eq.configuration =
            PoolingConfiguration{{Pool{OwnerSet{0}}, Pool{OwnerSet{1}}}};
        eq.schedule = ConstantSchedule{rat(50)};
        eq.performance = {rat(1), rat(1, 2)};
        const auto record = distribute_epoch(eq, 0, {0, 1});
        CHECK(record.pot.distributable == 100);
        CHECK(record.pool_rewards.at(0) == 50);
        CHECK(record.pool_rewards.at(1) == 25);
        CHECK(record.shortfall == 25);
    }
}

TEST_CASE("run loop") {
    auto s = two_pool_scenario(0);
    CHECK(run(s).empty());

    s.epochs = 10;
    const auto records = run(s);
    REQUIRE(records.size() == 10);
    for (const auto& record : records) CHECK(record.pot.emission == 50);

    const auto again = run(s);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].committee == again[i].committee);
        CHECK(records[i].pool_rewards == again[i].pool_rewards);
        CHECK(records[i].owner_rewards == again[i].owner_rewards);
    }
}

TEST_CASE("per-epoch conservation and owner budget balance") {
    auto s = two_pool_scenario(25);
    s.treasury_rate = rat(1, 5);
    s.performance = {rat(3, 4), rat(1, 2)};
    for (const auto& record : run(s)) {
        Rational pool_total = 0;
        for (const auto& [p, reward] : record.pool_rewards) pool_total += reward;
        CHECK(record.pot.treasury_cut + pool_total + record.shortfall ==
              record.pot.emission + record.pot.fees);
        CHECK(pool_total <= record.pot.distributable);

        // per-pool: owner shares sum to reward minus cost (costs are zero here)
        for (const auto& [p, reward] : record.pool_rewards) {
            Rational owner_total = 0;
            for (OwnerId id : s.configuration.pools[p].members.members())
                owner_total += record.owner_rewards.at(id);
            CHECK(owner_total == reward);
        }
    }
}

TEST_CASE("scenario validation") {
    auto s = two_pool_scenario();
    s.committee_size = 3;
    CHECK_THROWS_AS(validate_scenario(s), Error);
    s.committee_size = 2;
    s.performance = {rat(1)};
    CHECK_THROWS_AS(validate_scenario(s), Error);
    s.performance = {rat(1), rat(2)};
    CHECK_THROWS_AS(validate_scenario(s), Error);
}
