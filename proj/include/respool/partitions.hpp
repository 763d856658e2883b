#ifndef RESPOOL_PARTITIONS_HPP
#define RESPOOL_PARTITIONS_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "respool/owner_set.hpp"

namespace respool {

// Set-partition enumeration via restricted growth strings: a[0] = 0 and
// a[i] <= max(a[0..i-1]) + 1, visited in lexicographic string order.
// Blocks are ordered by first member. The partition of an empty item list
// is the empty partition, visited exactly once.
// The visitor may return true to stop early; returns whether it did.
template <typename Visitor>
bool for_each_partition(const std::vector<OwnerId>& items, Visitor&& visit) {
    const std::size_t n = items.size();
    if (n == 0) {
        std::vector<OwnerSet> empty;
        return visit(empty);
    }
    std::vector<std::size_t> rgs(n, 0);
    while (true) {
        const std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<OwnerSet> part(blocks);
        for (std::size_t i = 0; i < n; ++i) part[rgs[i]].insert(items[i]);
        if (visit(part)) return true;

        // advance to the next restricted growth string
        bool advanced = false;
        for (std::size_t i = n; i-- > 1;) {
            const std::size_t prefix_max =
                *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= prefix_max) {
                ++rgs[i];
                std::fill(rgs.begin() + i + 1, rgs.end(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced) return false;
    }
}

}  // namespace respool

#endif  // RESPOOL_PARTITIONS_HPP
