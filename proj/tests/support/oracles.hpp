#pragma once

// Brute-force reference implementations used by the unit and acceptance
// suites. Everything here works on std::set and element-by-element loops,
// deliberately avoiding the library's bit-parallel paths so the two sides
// stay independent.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "rough/fca.hpp"
#include "rough/formula.hpp"
#include "rough/information_system.hpp"
#include "rough/s5.hpp"

namespace oracles {

using ObjSet = std::set<std::size_t>;

inline ObjSet to_set(const rough::BitSet& bits) {
    ObjSet out;
    bits.for_each([&](std::size_t i) { out.insert(i); });
    return out;
}

inline rough::BitSet to_bitset(std::size_t carrier, const ObjSet& s) {
    rough::BitSet out(carrier);
    for (std::size_t i : s) out.set(i);
    return out;
}

// Partition by pairwise agreement on the chosen attributes, grouping each
// object into the first matching bucket.
inline std::vector<ObjSet> partition(const rough::InformationSystem& sys,
                                     const std::vector<std::string>& attrs) {
    std::vector<std::size_t> chosen;
    for (const auto& name : attrs) {
        auto idx = sys.attribute_index(name);
        if (!idx) throw std::runtime_error("oracle: unknown attribute");
        chosen.push_back(*idx);
    }
    auto agree = [&](std::size_t a, std::size_t b) {
        for (std::size_t j : chosen)
            if (sys.value(a, j) != sys.value(b, j)) return false;
        return true;
    };
    std::vector<ObjSet> blocks;
    std::vector<std::size_t> representative;
    for (std::size_t i = 0; i < sys.object_count(); ++i) {
        bool placed = false;
        for (std::size_t b = 0; b < blocks.size() && !placed; ++b) {
            if (agree(representative[b], i)) {
                blocks[b].insert(i);
                placed = true;
            }
        }
        if (!placed) {
            blocks.push_back({i});
            representative.push_back(i);
        }
    }
    return blocks;
}

inline ObjSet lower(const std::vector<ObjSet>& blocks, const ObjSet& x) {
    ObjSet out;
    for (const ObjSet& block : blocks) {
        bool included = true;
        for (std::size_t e : block)
            if (!x.count(e)) {
                included = false;
                break;
            }
        if (included) out.insert(block.begin(), block.end());
    }
    return out;
}

inline ObjSet upper(const std::vector<ObjSet>& blocks, const ObjSet& x) {
    ObjSet out;
    for (const ObjSet& block : blocks) {
        bool meets = false;
        for (std::size_t e : block)
            if (x.count(e)) {
                meets = true;
                break;
            }
        if (meets) out.insert(block.begin(), block.end());
    }
    return out;
}

// Per-object truth of a plain formula.
inline bool eval_at(const rough::InformationSystem& sys, const rough::Formula& f,
                    std::size_t object) {
    using Kind = rough::Formula::Kind;
    switch (f.kind()) {
    case Kind::truth:
        return true;
    case Kind::falsity:
        return false;
    case Kind::atom: {
        auto idx = sys.attribute_index(f.attribute());
        if (!idx) throw std::runtime_error("oracle: unknown attribute");
        return sys.value(object, *idx) == f.value();
    }
    case Kind::negation:
        return !eval_at(sys, f.child(), object);
    case Kind::conjunction:
        return eval_at(sys, f.left(), object) && eval_at(sys, f.right(), object);
    case Kind::disjunction:
        return eval_at(sys, f.left(), object) || eval_at(sys, f.right(), object);
    default:
        throw std::runtime_error("oracle: modal operator in plain evaluation");
    }
}

// Per-world truth over a Kripke model, quantifying with plain loops.
inline bool holds(const rough::KripkeModel& model, const rough::Formula& f,
                  std::size_t world) {
    using Kind = rough::Formula::Kind;
    switch (f.kind()) {
    case Kind::truth:
        return true;
    case Kind::falsity:
        return false;
    case Kind::atom:
        return eval_at(model.system(), f, world);
    case Kind::negation:
        return !holds(model, f.child(), world);
    case Kind::conjunction:
        return holds(model, f.left(), world) && holds(model, f.right(), world);
    case Kind::disjunction:
        return holds(model, f.left(), world) || holds(model, f.right(), world);
    case Kind::box:
        for (std::size_t v = 0; v < model.world_count(); ++v)
            if (model.accessible_from(world).test(v) && !holds(model, f.child(), v))
                return false;
        return true;
    case Kind::diamond:
        for (std::size_t v = 0; v < model.world_count(); ++v)
            if (model.accessible_from(world).test(v) && holds(model, f.child(), v))
                return true;
        return false;
    }
    throw std::runtime_error("oracle: corrupt formula");
}

struct ConceptPair {
    ObjSet extent;
    ObjSet intent;

    bool operator<(const ConceptPair& o) const {
        if (extent != o.extent) return extent < o.extent;
        return intent < o.intent;
    }
    bool operator==(const ConceptPair& o) const {
        return extent == o.extent && intent == o.intent;
    }
};

inline ObjSet extent_loop(const rough::FormalContext& ctx, const ObjSet& props) {
    ObjSet out;
    for (std::size_t x = 0; x < ctx.object_count(); ++x) {
        bool all = true;
        for (std::size_t y : props)
            if (!ctx.incident(x, y)) {
                all = false;
                break;
            }
        if (all) out.insert(x);
    }
    return out;
}

inline ObjSet intent_loop(const rough::FormalContext& ctx, const ObjSet& objs) {
    ObjSet out;
    for (std::size_t y = 0; y < ctx.property_count(); ++y) {
        bool all = true;
        for (std::size_t x : objs)
            if (!ctx.incident(x, y)) {
                all = false;
                break;
            }
        if (all) out.insert(y);
    }
    return out;
}

// Every concept, by sweeping all 2^|Y| property subsets and closing them.
inline std::set<ConceptPair> concepts(const rough::FormalContext& ctx) {
    const std::size_t m = ctx.property_count();
    if (m > 20) throw std::runtime_error("oracle: context too wide to sweep");
    std::set<ConceptPair> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        ObjSet props;
        for (std::size_t y = 0; y < m; ++y)
            if (mask & (std::size_t{1} << y)) props.insert(y);
        ObjSet extent = extent_loop(ctx, props);
        ObjSet intent = intent_loop(ctx, extent);
        out.insert({extent, intent});
    }
    return out;
}

// Cover pairs (lower extent, upper extent) of the concept order.
inline std::set<std::pair<ObjSet, ObjSet>> covers(const std::set<ConceptPair>& concepts) {
    std::vector<ObjSet> extents;
    for (const auto& c : concepts) extents.push_back(c.extent);
    auto proper_subset = [](const ObjSet& a, const ObjSet& b) {
        if (a.size() >= b.size()) return false;
        for (std::size_t e : a)
            if (!b.count(e)) return false;
        return true;
    };
    std::set<std::pair<ObjSet, ObjSet>> out;
    for (const ObjSet& a : extents) {
        for (const ObjSet& b : extents) {
            if (!proper_subset(a, b)) continue;
            bool direct = true;
            for (const ObjSet& c : extents)
                if (proper_subset(a, c) && proper_subset(c, b)) {
                    direct = false;
                    break;
                }
            if (direct) out.insert({a, b});
        }
    }
    return out;
}

// Lectic comparison with property 0 most significant: a < b iff the
// smallest differing property belongs to b.
inline bool lectic_less(const ObjSet& a, const ObjSet& b, std::size_t m) {
    for (std::size_t y = 0; y < m; ++y) {
        const bool ina = a.count(y) > 0;
        const bool inb = b.count(y) > 0;
        if (ina != inb) return inb;
    }
    return false;
}

}  // namespace oracles
