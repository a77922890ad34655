#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rough/bitset.hpp"
#include "rough/formula.hpp"
#include "rough/information_system.hpp"

namespace rough {

enum class ApproxMode { lower, upper };

// Extension of a plain formula in a system: the set of objects satisfying
// it. Atoms select the objects whose attribute carries the given value; an
// unknown attribute is an error, an unknown value just denotes the empty
// set. Modal operators are rejected here; they need a Kripke model.
BitSet meaning(const InformationSystem& sys, const Formula& f);

// Synthesizes the lower or upper description of x with respect to the
// indiscernibility partition on attrs: one conjunction of (attribute,value)
// atoms per qualifying elementary set (included in x for lower, meeting x
// for upper), joined into a disjunction. Returns false when no elementary
// set qualifies. Disjuncts follow the canonical block order and conjuncts
// the attribute order, so the result is deterministic, and its meaning
// equals the corresponding approximation of x.
Formula describe_set(const InformationSystem& sys, std::span<const std::string> attrs,
                     const BitSet& x, ApproxMode mode);

// Canonical rendering of a block-disjunction: each multi-atom conjunct is
// parenthesized, e.g. "(color=blue and size=small) or (color=red and
// size=small)". Parsing the text back yields a structurally equal formula.
std::string to_dnf_string(const Formula& f);

// An elementary descriptor: one (attribute, value) pair.
struct Descriptor {
    std::string attribute;
    std::string value;

    bool operator==(const Descriptor&) const = default;
};

// Every (attribute, value) pair occurring in the table, in canonical order:
// attribute-major, values by first occurrence down the column.
std::vector<Descriptor> descriptor_universe(const InformationSystem& sys);

// Objects, elementary descriptors, and a description relation between
// them. The relation is an arbitrary set of (object, descriptor) pairs, so
// hand-built instances may relate an object to several values of one
// attribute; instances derived from an information system are functional.
class DescriptiveSystem {
public:
    DescriptiveSystem(std::vector<std::string> objects, std::vector<Descriptor> descriptors,
                      const std::vector<std::pair<std::size_t, std::size_t>>& description);

    static DescriptiveSystem from_information_system(const InformationSystem& sys);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t descriptor_count() const { return descriptors_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<Descriptor>& descriptors() const { return descriptors_; }

    bool describes(std::size_t object, std::size_t descriptor) const {
        return rows_[object].test(descriptor);
    }

    // Descriptors borne by one object.
    const BitSet& description_of(std::size_t object) const { return rows_[object]; }

    // True when no object bears two values of the same attribute.
    bool functional() const;

private:
    std::vector<std::string> objects_;
    std::vector<Descriptor> descriptors_;
    std::vector<BitSet> rows_;
};

}  // namespace rough
