#pragma once

#include "rough/bitset.hpp"
#include "rough/information_system.hpp"

namespace rough {

// Lower approximation: union of the elementary sets included in x.
BitSet lower(const ApproximationSpace& space, const BitSet& x);

// Upper approximation: union of the elementary sets intersecting x.
BitSet upper(const ApproximationSpace& space, const BitSet& x);

// Four-way decomposition of the universe induced by a target set:
// loweris certain membership, boundary is undecidable, outside is certain
// non-membership. boundary = upper \ lower, outside = U \ upper.
struct RoughRegions {
    BitSet lower;
    BitSet upper;
    BitSet boundary;
    BitSet outside;
};

RoughRegions regions(const ApproximationSpace& space, const BitSet& x);

// A set is exact when its approximations coincide, rough otherwise.
bool is_exact(const ApproximationSpace& space, const BitSet& x);

// Approximate equality, split by which approximation is compared.
struct RoughEquality {
    bool lower_equal;
    bool upper_equal;
    bool rough_equal;  // both
};

RoughEquality rough_equal(const ApproximationSpace& space, const BitSet& x, const BitSet& y);

// Approximate inclusion, analogous with subset in place of equality.
struct RoughInclusion {
    bool lower_incl;
    bool upper_incl;
    bool rough_incl;  // both
};

RoughInclusion rough_included(const ApproximationSpace& space, const BitSet& x, const BitSet& y);

}  // namespace rough
