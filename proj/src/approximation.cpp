#include "rough/approximation.hpp"

#include <stdexcept>

namespace rough {

namespace {

void require_in_universe(const ApproximationSpace& space, const BitSet& x) {
    if (x.size() != space.universe_size())
        throw std::invalid_argument("object set does not match the space's universe");
}

}  // namespace

BitSet lower(const ApproximationSpace& space, const BitSet& x) {
    require_in_universe(space, x);
    BitSet result(space.universe_size());
    for (const BitSet& block : space.blocks())
        if (block.is_subset_of(x)) result |= block;
    return result;
}

BitSet upper(const ApproximationSpace& space, const BitSet& x) {
    require_in_universe(space, x);
    BitSet result(space.universe_size());
    for (const BitSet& block : space.blocks())
        if (block.intersects(x)) result |= block;
    return result;
}

RoughRegions regions(const ApproximationSpace& space, const BitSet& x) {
    RoughRegions r{lower(space, x), upper(space, x), BitSet{}, BitSet{}};
    r.boundary = r.upper - r.lower;
    r.outside = space.universe() - r.upper;
    return r;
}

bool is_exact(const ApproximationSpace& space, const BitSet& x) {
    return lower(space, x) == upper(space, x);
}

RoughEquality rough_equal(const ApproximationSpace& space, const BitSet& x, const BitSet& y) {
    RoughEquality r{};
    r.lower_equal = lower(space, x) == lower(space, y);
    r.upper_equal = upper(space, x) == upper(space, y);
    r.rough_equal = r.lower_equal && r.upper_equal;
    return r;
}

RoughInclusion rough_included(const ApproximationSpace& space, const BitSet& x, const BitSet& y) {
    RoughInclusion r{};
    r.lower_incl = lower(space, x).is_subset_of(lower(space, y));
    r.upper_incl = upper(space, x).is_subset_of(upper(space, y));
    r.rough_incl = r.lower_incl && r.upper_incl;
    return r;
}

}  // namespace rough
