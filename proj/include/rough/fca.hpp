#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rough/bitset.hpp"
#include "rough/information_system.hpp"

namespace rough {

// Binary incidence between objects and properties. Rows (per object) and
// columns (per property) are both materialized as bit sets since the
// derivation operators intersect along either axis.
class FormalContext {
public:
    FormalContext(std::vector<std::string> objects, std::vector<std::string> properties,
                  const std::vector<std::pair<std::size_t, std::size_t>>& incidence);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t property_count() const { return properties_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& properties() const { return properties_; }

    bool incident(std::size_t object, std::size_t property) const {
        return rows_[object].test(property);
    }

    const BitSet& object_row(std::size_t object) const { return rows_[object]; }
    const BitSet& property_column(std::size_t property) const { return cols_[property]; }

    std::optional<std::size_t> object_index(std::string_view id) const;
    std::optional<std::size_t> property_index(std::string_view name) const;

    // Name-based set construction; throws InputError on unknown names.
    BitSet object_set(std::span<const std::string> ids) const;
    BitSet property_set(std::span<const std::string> names) const;

private:
    std::vector<std::string> objects_;
    std::vector<std::string> properties_;
    std::vector<BitSet> rows_;
    std::vector<BitSet> cols_;
    std::unordered_map<std::string, std::size_t> object_index_;
    std::unordered_map<std::string, std::size_t> property_index_;
};

// Objects bearing every property in b.
BitSet extent_of(const FormalContext& ctx, const BitSet& b);

// Properties borne by every object in a.
BitSet intent_of(const FormalContext& ctx, const BitSet& a);

// Closed pair: a = extent_of(b) and b = intent_of(a).
bool is_formal_concept(const FormalContext& ctx, const BitSet& a, const BitSet& b);

struct FormalConcept {
    BitSet extent;
    BitSet intent;

    bool operator==(const FormalConcept&) const = default;
};

// All concepts ordered lectically by intent, plus the cover relation of the
// concept order (a_i, b_i) <= (a_j, b_j) iff extent_i is a subset of
// extent_j. covers holds (i, j) pairs meaning concept i is covered by
// concept j, sorted ascending; it is the transitive reduction of <=.
struct ConceptLattice {
    std::vector<FormalConcept> concepts;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
};

// Enumerates every formal concept exactly once via closures of intents in
// lectic order. Throws InputError when the context has more than
// max_properties properties (the enumeration is exponential in the worst
// case).
ConceptLattice all_concepts(const FormalContext& ctx, std::size_t max_properties = 24);

// Nominal scaling: one property "attr=value" per value occurring in each
// column, incidence by exact match. Property order is attribute-major with
// values by first occurrence, matching descriptor_universe.
FormalContext context_from_information_system(const InformationSystem& sys);

// Delimited binary context: header "id,<property names...>", cells 1/0.
FormalContext load_context(const std::vector<std::vector<std::string>>& records);
FormalContext load_context_file(const std::string& path);

// Concept label "{objects}|{properties}" in canonical order.
std::string concept_label(const FormalContext& ctx, const FormalConcept& c);

// Emits the lattice as a DOT digraph: one node per concept labeled
// "{extent}|{intent}", one edge per cover pair, drawn bottom-up.
void write_dot(std::ostream& out, const FormalContext& ctx, const ConceptLattice& lattice);

}  // namespace rough
