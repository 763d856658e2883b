#ifndef RESPOOL_OWNER_SET_HPP
#define RESPOOL_OWNER_SET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace respool {

using OwnerId = std::size_t;

// A set of owners, i.e. an owner join. Backed by a bitmask; the library
// caps universes at 64 owners, far beyond any enumeration bound in use.
class OwnerSet {
public:
    static constexpr std::size_t max_owners = 64;

    OwnerSet() = default;
    explicit OwnerSet(std::uint64_t bits) : bits_(bits) {}
    OwnerSet(std::initializer_list<OwnerId> ids) {
        for (OwnerId id : ids) insert(id);
    }

    static OwnerSet of(const std::vector<OwnerId>& ids) {
        OwnerSet s;
        for (OwnerId id : ids) s.insert(id);
        return s;
    }

    // {0, 1, ..., n-1}
    static OwnerSet full(std::size_t n) {
        return n >= 64 ? OwnerSet(~std::uint64_t{0})
                       : OwnerSet((std::uint64_t{1} << n) - 1);
    }

    bool empty() const { return bits_ == 0; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool contains(OwnerId id) const { return id < 64 && (bits_ >> id) & 1; }
    void insert(OwnerId id) { bits_ |= std::uint64_t{1} << id; }
    void erase(OwnerId id) { bits_ &= ~(std::uint64_t{1} << id); }

    bool subset_of(const OwnerSet& other) const { return (bits_ & ~other.bits_) == 0; }
    bool disjoint_with(const OwnerSet& other) const { return (bits_ & other.bits_) == 0; }

    OwnerSet unite(const OwnerSet& other) const { return OwnerSet(bits_ | other.bits_); }
    OwnerSet intersect(const OwnerSet& other) const { return OwnerSet(bits_ & other.bits_); }
    OwnerSet minus(const OwnerSet& other) const { return OwnerSet(bits_ & ~other.bits_); }

    std::vector<OwnerId> members() const {
        std::vector<OwnerId> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(static_cast<OwnerId>(std::countr_zero(b)));
        return out;
    }

    std::uint64_t bits() const { return bits_; }

    bool operator==(const OwnerSet&) const = default;

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (OwnerId id : members()) {
            if (!first) out += ",";
            out += std::to_string(id);
            first = false;
        }
        return out + "}";
    }

private:
    std::uint64_t bits_ = 0;
};

// Order by the increasing member sequence; a proper prefix sorts first.
// {0} < {0,1} < {0,2} < {1} < {1,2}.
inline bool lex_less(const OwnerSet& a, const OwnerSet& b) {
    std::uint64_t x = a.bits(), y = b.bits();
    while (x && y) {
        const int i = std::countr_zero(x);
        const int j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

// Visits every nonempty subset of `base` in descending bitmask order.
// The visitor may return true to stop early; returns whether it did.
template <typename Visitor>
bool for_each_nonempty_subset(const OwnerSet& base, Visitor&& visit) {
    const std::uint64_t mask = base.bits();
    for (std::uint64_t s = mask; s != 0; s = (s - 1) & mask) {
        if (visit(OwnerSet(s))) return true;
    }
    return false;
}

// All nonempty subsets of `base` sorted by lex_less.
inline std::vector<OwnerSet> nonempty_subsets_lex(const OwnerSet& base) {
    std::vector<OwnerSet> out;
    out.reserve((std::size_t{1} << base.size()) - 1);
    for_each_nonempty_subset(base, [&](OwnerSet s) {
        out.push_back(s);
        return false;
    });
    std::sort(out.begin(), out.end(),
              [](const OwnerSet& a, const OwnerSet& b) { return lex_less(a, b); });
    return out;
}

}  // namespace respool

#endif  // RESPOOL_OWNER_SET_HPP
