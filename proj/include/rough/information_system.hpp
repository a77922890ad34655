#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rough/bitset.hpp"

namespace rough {

// Finite attribute-value table: a totally defined map
// (object, attribute) -> value token. Values are opaque strings compared by
// exact equality. Object and attribute order is the ingestion order and is
// the canonical index order used by every other module.
class InformationSystem {
public:
    // Throws InputError on duplicate object ids, duplicate attribute names,
    // an empty attribute list, or a cell count that does not match
    // objects x attributes.
    InformationSystem(std::vector<std::string> objects,
                      std::vector<std::string> attributes,
                      std::vector<std::string> cells);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }

    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }

    const std::string& value(std::size_t object, std::size_t attribute) const {
        return cells_[object * attributes_.size() + attribute];
    }

    std::optional<std::size_t> object_index(std::string_view id) const;
    std::optional<std::size_t> attribute_index(std::string_view name) const;

    // Resolves attribute names to indices; throws InputError on an unknown
    // name or an empty list. Duplicates are collapsed (the list denotes a
    // set); the result keeps canonical attribute order.
    std::vector<std::size_t> attribute_subset(std::span<const std::string> names) const;

    // Builds the subset of the universe named by ids; throws InputError on
    // an unknown id. Duplicates are collapsed.
    BitSet object_set(std::span<const std::string> ids) const;

    BitSet universe() const { return BitSet::full(objects_.size()); }

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<std::string> cells_;  // row-major, objects x attributes
    std::unordered_map<std::string, std::size_t> object_index_;
    std::unordered_map<std::string, std::size_t> attribute_index_;
};

// Builds a system from delimited records. The first record is the header:
// the literal id column name "id" followed by at least one attribute name.
// Data rows supply one object each, in order. Errors carry row/column
// positions; data rows are numbered from 1.
InformationSystem load_table(const std::vector<std::vector<std::string>>& records);
InformationSystem load_table_file(const std::string& path);

// Universe plus a partition into elementary sets. Blocks are stored in
// canonical order (ascending least member); block_of maps each object to
// its block index.
class ApproximationSpace {
public:
    // Validates the partition: blocks nonempty, pairwise disjoint, covering
    // exactly the universe. Blocks are re-ordered canonically. Throws
    // std::invalid_argument on violations.
    ApproximationSpace(std::vector<std::string> ids,
                       const std::vector<std::vector<std::size_t>>& blocks);

    std::size_t universe_size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }

    const std::vector<BitSet>& blocks() const { return blocks_; }
    std::size_t block_of(std::size_t object) const { return block_of_[object]; }
    const BitSet& block_containing(std::size_t object) const {
        return blocks_[block_of_[object]];
    }

    BitSet universe() const { return BitSet::full(ids_.size()); }

private:
    std::vector<std::string> ids_;
    std::vector<BitSet> blocks_;
    std::vector<std::size_t> block_of_;
};

// Partition of the system's universe where two objects share a block iff
// they agree on every attribute in attrs. attrs must be a nonempty subset
// of the system's attributes.
ApproximationSpace indiscernibility(const InformationSystem& sys,
                                    std::span<const std::string> attrs);

// The partition blocks in canonical order.
const std::vector<BitSet>& elementary_sets(const ApproximationSpace& space);

}  // namespace rough
