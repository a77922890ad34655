#include "rough/information_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rough/errors.hpp"
#include "rough/io.hpp"

namespace rough {

InformationSystem::InformationSystem(std::vector<std::string> objects,
                                     std::vector<std::string> attributes,
                                     std::vector<std::string> cells)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      cells_(std::move(cells)) {
    if (attributes_.empty()) throw InputError("empty attribute set");
    if (cells_.size() != objects_.size() * attributes_.size())
        throw InputError("value table is not total: expected " +
                         std::to_string(objects_.size() * attributes_.size()) +
                         " cells, got " + std::to_string(cells_.size()));
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (!object_index_.emplace(objects_[i], i).second)
            throw InputError("duplicate object id '" + objects_[i] + "'");
    for (std::size_t j = 0; j < attributes_.size(); ++j)
        if (!attribute_index_.emplace(attributes_[j], j).second)
            throw InputError("duplicate attribute name '" + attributes_[j] + "'");
}

std::optional<std::size_t> InformationSystem::object_index(std::string_view id) const {
    auto it = object_index_.find(std::string(id));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> InformationSystem::attribute_index(std::string_view name) const {
    auto it = attribute_index_.find(std::string(name));
    if (it == attribute_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> InformationSystem::attribute_subset(
    std::span<const std::string> names) const {
    if (names.empty()) throw InputError("empty attribute list");
    std::vector<bool> chosen(attributes_.size(), false);
    for (const auto& name : names) {
        auto idx = attribute_index(name);
        if (!idx) throw InputError("unknown attribute '" + name + "'");
        chosen[*idx] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < chosen.size(); ++j)
        if (chosen[j]) out.push_back(j);
    return out;
}

BitSet InformationSystem::object_set(std::span<const std::string> ids) const {
    BitSet s(objects_.size());
    for (const auto& id : ids) {
        auto idx = object_index(id);
        if (!idx) throw InputError("unknown object id '" + id + "'");
        s.set(*idx);
    }
    return s;
}

InformationSystem load_table(const std::vector<std::vector<std::string>>& records) {
    if (records.empty()) throw InputError("missing header record");
    const auto& header = records.front();
    if (header.empty() || header[0] != "id")
        throw InputError("first header column must be 'id'");
    if (header.size() < 2) throw InputError("empty attribute set");

    std::vector<std::string> attributes(header.begin() + 1, header.end());
    for (std::size_t j = 0; j < attributes.size(); ++j)
        for (std::size_t k = j + 1; k < attributes.size(); ++k)
            if (attributes[j] == attributes[k])
                throw InputError("duplicate attribute name '" + attributes[j] +
                                 "' at column " + std::to_string(k + 2));

    std::vector<std::string> objects;
    std::vector<std::string> cells;
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& row = records[r];
        if (row.size() != header.size())
            throw InputError("ragged row " + std::to_string(r) + ": expected " +
                             std::to_string(header.size()) + " cells, got " +
                             std::to_string(row.size()));
        if (!seen.emplace(row[0], r).second)
            throw InputError("duplicate object id '" + row[0] + "' at row " +
                             std::to_string(r));
        objects.push_back(row[0]);
        cells.insert(cells.end(), row.begin() + 1, row.end());
    }
    return InformationSystem(std::move(objects), std::move(attributes), std::move(cells));
}

InformationSystem load_table_file(const std::string& path) {
    return load_table(read_delimited_file(path));
}

ApproximationSpace::ApproximationSpace(std::vector<std::string> ids,
                                       const std::vector<std::vector<std::size_t>>& blocks)
    : ids_(std::move(ids)) {
    const std::size_t n = ids_.size();
    std::vector<std::vector<std::size_t>> sorted_blocks;
    sorted_blocks.reserve(blocks.size());
    for (const auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("empty partition block");
        auto copy = block;
        std::sort(copy.begin(), copy.end());
        sorted_blocks.push_back(std::move(copy));
    }
    std::sort(sorted_blocks.begin(), sorted_blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    block_of_.assign(n, blocks.size());
    blocks_.reserve(sorted_blocks.size());
    std::size_t covered = 0;
    for (std::size_t b = 0; b < sorted_blocks.size(); ++b) {
        BitSet bits(n);
        for (std::size_t obj : sorted_blocks[b]) {
            if (obj >= n) throw std::invalid_argument("partition member outside universe");
            if (block_of_[obj] != blocks.size())
                throw std::invalid_argument("partition blocks are not disjoint");
            block_of_[obj] = b;
            bits.set(obj);
            ++covered;
        }
        blocks_.push_back(std::move(bits));
    }
    if (covered != n) throw std::invalid_argument("partition does not cover the universe");
}

ApproximationSpace indiscernibility(const InformationSystem& sys,
                                    std::span<const std::string> attrs) {
    const std::vector<std::size_t> chosen = sys.attribute_subset(attrs);

    // Sort object indices by their restricted value tuple, then cut into
    // runs of equal tuples. stable_sort keeps members of a block in
    // ascending index order, so each block's least member is its front.
    std::vector<std::size_t> order(sys.object_count());
    std::iota(order.begin(), order.end(), 0);
    auto tuple_less = [&](std::size_t a, std::size_t b) {
        for (std::size_t j : chosen) {
            int c = sys.value(a, j).compare(sys.value(b, j));
            if (c != 0) return c < 0;
        }
        return false;
    };
    auto tuple_equal = [&](std::size_t a, std::size_t b) {
        for (std::size_t j : chosen)
            if (sys.value(a, j) != sys.value(b, j)) return false;
        return true;
    };
    std::stable_sort(order.begin(), order.end(), tuple_less);

    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i + 1;
        while (j < order.size() && tuple_equal(order[i], order[j])) ++j;
        blocks.emplace_back(order.begin() + i, order.begin() + j);
        i = j;
    }
    return ApproximationSpace(sys.objects(), blocks);
}

const std::vector<BitSet>& elementary_sets(const ApproximationSpace& space) {
    return space.blocks();
}

}  // namespace rough
