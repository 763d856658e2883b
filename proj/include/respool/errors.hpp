#ifndef RESPOOL_ERRORS_HPP
#define RESPOOL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace respool {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveWeight : Error {
    explicit NonPositiveWeight(std::size_t owner)
        : Error("owner " + std::to_string(owner) + " has a non-positive weight") {}
};

struct WeightsDoNotSumToOne : Error {
    WeightsDoNotSumToOne() : Error("owner weights do not sum to exactly 1") {}
};

struct UnknownOwner : Error {
    explicit UnknownOwner(std::size_t owner)
        : Error("owner " + std::to_string(owner) + " is not part of the universe") {}
};

struct OverlappingPools : Error {
    OverlappingPools(std::size_t owner, std::size_t pool_a, std::size_t pool_b)
        : Error("owner " + std::to_string(owner) + " appears in pools " +
                std::to_string(pool_a) + " and " + std::to_string(pool_b)),
          owner(owner), pool_a(pool_a), pool_b(pool_b) {}
    std::size_t owner, pool_a, pool_b;
};

struct EmptyPool : Error {
    explicit EmptyPool(std::size_t index)
        : Error("pool " + std::to_string(index) + " is empty"), index(index) {}
    std::size_t index;
};

struct EmptySet : Error {
    EmptySet() : Error("cost is undefined on the empty set") {}
};

struct UndefinedCost : Error {
    explicit UndefinedCost(const std::string& which)
        : Error("cost is undefined (no table entry) for " + which) {}
};

struct SubsetLimitExceeded : Error {
    SubsetLimitExceeded(std::size_t size, std::size_t bound)
        : Error("set of " + std::to_string(size) +
                " owners exceeds the enumeration bound " + std::to_string(bound)) {}
};

struct EnumerationLimitExceeded : Error {
    EnumerationLimitExceeded(std::size_t size, std::size_t bound)
        : Error("universe of " + std::to_string(size) +
                " owners exceeds the coalition enumeration bound " +
                std::to_string(bound)) {}
};

struct MeasureOutOfRange : Error {
    MeasureOutOfRange() : Error("measure argument outside [0,1]") {}
};

struct NotOnGrid : Error {
    NotOnGrid() : Error("measure does not match any tabulated grid point") {}
};

struct RateOutOfRange : Error {
    RateOutOfRange() : Error("treasury rate outside [0,1]") {}
};

struct EpochOutOfCustomRange : Error {
    explicit EpochOutOfCustomRange(unsigned long long epoch)
        : Error("epoch " + std::to_string(epoch) + " not covered by the custom schedule") {}
};

struct KTooLarge : Error {
    KTooLarge(std::size_t k, std::size_t positive)
        : Error("committee size " + std::to_string(k) + " exceeds the " +
                std::to_string(positive) + " pools with positive weight") {}
};

struct ScenarioError : Error {
    using Error::Error;
};

}  // namespace respool

#endif  // RESPOOL_ERRORS_HPP
