#ifndef RESPOOL_RESOURCE_MODEL_HPP
#define RESPOOL_RESOURCE_MODEL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "respool/errors.hpp"
#include "respool/owner_set.hpp"
#include "respool/rational.hpp"
#include "respool/splitting.hpp"

namespace respool {

// The resource universe at owner granularity: one element per owner,
// carrying that owner's exact share of the total resources. The measure of
// an owner join is the sum of member weights; weights sum to exactly 1.
class ResourceUniverse {
public:
    static ResourceUniverse from_weights(std::vector<Rational> weights) {
        if (weights.empty() || weights.size() > OwnerSet::max_owners)
            throw Error("universe must have between 1 and 64 owners");
        Rational total = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] <= 0) throw NonPositiveWeight(i);
            total += weights[i];
        }
        if (total != 1) throw WeightsDoNotSumToOne();
        return ResourceUniverse(std::move(weights));
    }

    std::size_t owner_count() const { return weights_.size(); }

    const Rational& weight(OwnerId id) const {
        if (id >= weights_.size()) throw UnknownOwner(id);
        return weights_[id];
    }

    OwnerSet all_owners() const { return OwnerSet::full(weights_.size()); }

    Rational measure(const OwnerSet& s) const {
        Rational sum = 0;
        for (OwnerId id : s.members()) sum += weight(id);
        return sum;
    }

private:
    explicit ResourceUniverse(std::vector<Rational> w) : weights_(std::move(w)) {}
    std::vector<Rational> weights_;
};

struct Pool {
    OwnerSet members;
    SplittingStrategy split = FairShare{};
};

// Mutually disjoint pools of owners. Owners in no pool are inactive and
// earn zero.
struct PoolingConfiguration {
    std::vector<Pool> pools;

    static PoolingConfiguration centralized(const ResourceUniverse& u,
                                            SplittingStrategy split = FairShare{}) {
        return PoolingConfiguration{{Pool{u.all_owners(), std::move(split)}}};
    }

    static PoolingConfiguration all_solo(const ResourceUniverse& u) {
        PoolingConfiguration cfg;
        for (OwnerId id = 0; id < u.owner_count(); ++id)
            cfg.pools.push_back(Pool{OwnerSet{id}, FairShare{}});
        return cfg;
    }

    std::optional<std::size_t> pool_of(OwnerId id) const {
        for (std::size_t p = 0; p < pools.size(); ++p)
            if (pools[p].members.contains(id)) return p;
        return std::nullopt;
    }
};

inline void validate_configuration(const ResourceUniverse& u,
                                   const PoolingConfiguration& cfg) {
    OwnerSet seen;
    for (std::size_t p = 0; p < cfg.pools.size(); ++p) {
        const OwnerSet& pool = cfg.pools[p].members;
        if (pool.empty()) throw EmptyPool(p);
        if (!pool.subset_of(u.all_owners()))
            throw UnknownOwner(pool.minus(u.all_owners()).members().front());
        if (!pool.disjoint_with(seen)) {
            const OwnerId shared = pool.intersect(seen).members().front();
            std::size_t first = 0;
            for (std::size_t q = 0; q < p; ++q)
                if (cfg.pools[q].members.contains(shared)) { first = q; break; }
            throw OverlappingPools(shared, first, p);
        }
        if (const auto* om = std::get_if<OperatorMargin>(&cfg.pools[p].split)) {
            if (!pool.contains(om->op))
                throw Error("operator " + std::to_string(om->op) +
                            " is not a member of pool " + std::to_string(p));
            if (om->margin < 0 || om->margin > 1)
                throw Error("operator margin outside [0,1]");
        }
        seen = seen.unite(pool);
    }
}

}  // namespace respool

#endif  // RESPOOL_RESOURCE_MODEL_HPP
