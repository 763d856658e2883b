#ifndef RESPOOL_SPLITTING_HPP
#define RESPOOL_SPLITTING_HPP

#include <variant>

#include "respool/owner_set.hpp"
#include "respool/rational.hpp"

namespace respool {

// Pool profit is split among members proportionally to their resources.
struct FairShare {};

// The operator keeps `margin` of the pool profit off the top; the rest is
// split fair-share among all members, the operator included.
struct OperatorMargin {
    OwnerId op = 0;
    Rational margin;  // in [0,1]
};

using SplittingStrategy = std::variant<FairShare, OperatorMargin>;

}  // namespace respool

#endif  // RESPOOL_SPLITTING_HPP
