#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "respool/resource_model.hpp"
#include "test_util.hpp"

using namespace respool;
using test::rat;

TEST_CASE("universe construction") {
    const auto u = ResourceUniverse::from_weights({rat(1, 2), rat(1, 3), rat(1, 6)});
    CHECK(u.owner_count() == 3);

    const auto single = ResourceUniverse::from_weights({rat(1)});
    CHECK(single.owner_count() == 1);
    CHECK(single.measure(single.all_owners()) == 1);

    CHECK_THROWS_AS(ResourceUniverse::from_weights({rat(1, 2), rat(1, 2), rat(1, 2)}),
                    WeightsDoNotSumToOne);
    CHECK_THROWS_AS(ResourceUniverse::from_weights({rat(0), rat(1)}), NonPositiveWeight);
    CHECK_THROWS_AS(ResourceUniverse::from_weights({rat(3, 2), rat(-1, 2)}),
                    NonPositiveWeight);
}

TEST_CASE("measure on owner joins") {
    const auto u = ResourceUniverse::from_weights({rat(1, 2), rat(1, 3), rat(1, 6)});
    CHECK(u.measure(OwnerSet{0, 1}) == rat(5, 6));
    CHECK(u.measure(OwnerSet{}) == 0);
    CHECK(u.measure(OwnerSet{0, 1, 2}) == 1);
    CHECK_THROWS_AS(u.measure(OwnerSet{3}), UnknownOwner);
}

TEST_CASE("configuration validation") {
    const auto u = ResourceUniverse::from_weights({rat(1, 2), rat(1, 3), rat(1, 6)});

    PoolingConfiguration ok{{Pool{OwnerSet{0}}, Pool{OwnerSet{1, 2}}}};
    CHECK_NOTHROW(validate_configuration(u, ok));

    PoolingConfiguration overlapping{{Pool{OwnerSet{0, 1}}, Pool{OwnerSet{1, 2}}}};
    CHECK_THROWS_AS(validate_configuration(u, overlapping), OverlappingPools);
    try {
        validate_configuration(u, overlapping);
    } catch (const OverlappingPools& e) {
        CHECK(e.owner == 1);
        CHECK(e.pool_a == 0);
        CHECK(e.pool_b == 1);
    }

    CHECK_NOTHROW(validate_configuration(u, PoolingConfiguration::centralized(u)));
    CHECK_THROWS_AS(validate_configuration(u, PoolingConfiguration{{Pool{OwnerSet{}}}}),
                    EmptyPool);
    CHECK_THROWS_AS(validate_configuration(u, PoolingConfiguration{{Pool{OwnerSet{7}}}}),
                    UnknownOwner);

    // partial coverage is fine: inactive owners are allowed
    CHECK_NOTHROW(validate_configuration(u, PoolingConfiguration{{Pool{OwnerSet{1}}}}));
}

TEST_CASE("measure is modular and monotone") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const auto u = test::random_universe(rng, 2 + rng.next() % 6);
        const OwnerSet all = u.all_owners();
        const OwnerSet s(rng.next() & all.bits());
        const OwnerSet t(rng.next() & all.bits());
        CHECK(u.measure(s.unite(t)) ==
              u.measure(s) + u.measure(t) - u.measure(s.intersect(t)));
        if (s.subset_of(t)) CHECK(u.measure(s) <= u.measure(t));
        CHECK(u.measure(s.minus(t).unite(s.intersect(t))) == u.measure(s));
    }
}

TEST_CASE("owner set lexicographic order") {
    CHECK(lex_less(OwnerSet{0}, OwnerSet{0, 1}));
    CHECK(lex_less(OwnerSet{0, 1}, OwnerSet{0, 2}));
    CHECK(lex_less(OwnerSet{0, 2}, OwnerSet{1}));
    CHECK(!lex_less(OwnerSet{1}, OwnerSet{0, 5}));

    const auto subsets = nonempty_subsets_lex(OwnerSet::full(3));
    REQUIRE(subsets.size() == 7);
    CHECK(subsets.front() == OwnerSet{0});
    CHECK(subsets[1] == OwnerSet{0, 1});
    CHECK(subsets[2] == OwnerSet{0, 1, 2});
    CHECK(subsets.back() == OwnerSet{2});
}
