#include "rough/fca.hpp"

#include <algorithm>
#include <stdexcept>

#include "rough/descriptor.hpp"
#include "rough/errors.hpp"
#include "rough/io.hpp"

namespace rough {

FormalContext::FormalContext(std::vector<std::string> objects,
                             std::vector<std::string> properties,
                             const std::vector<std::pair<std::size_t, std::size_t>>& incidence)
    : objects_(std::move(objects)), properties_(std::move(properties)) {
    for (std::size_t i = 0; i < objects_.size(); ++i)
        if (!object_index_.emplace(objects_[i], i).second)
            throw InputError("duplicate object id '" + objects_[i] + "'");
    for (std::size_t j = 0; j < properties_.size(); ++j)
        if (!property_index_.emplace(properties_[j], j).second)
            throw InputError("duplicate property name '" + properties_[j] + "'");
    rows_.assign(objects_.size(), BitSet(properties_.size()));
    cols_.assign(properties_.size(), BitSet(objects_.size()));
    for (const auto& [object, property] : incidence) {
        if (object >= objects_.size() || property >= properties_.size())
            throw std::invalid_argument("incidence pair outside objects x properties");
        rows_[object].set(property);
        cols_[property].set(object);
    }
}

std::optional<std::size_t> FormalContext::object_index(std::string_view id) const {
    auto it = object_index_.find(std::string(id));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> FormalContext::property_index(std::string_view name) const {
    auto it = property_index_.find(std::string(name));
    if (it == property_index_.end()) return std::nullopt;
    return it->second;
}

BitSet FormalContext::object_set(std::span<const std::string> ids) const {
    BitSet s(objects_.size());
    for (const auto& id : ids) {
        auto idx = object_index(id);
        if (!idx) throw InputError("unknown object id '" + id + "'");
        s.set(*idx);
    }
    return s;
}

BitSet FormalContext::property_set(std::span<const std::string> names) const {
    BitSet s(properties_.size());
    for (const auto& name : names) {
        auto idx = property_index(name);
        if (!idx) throw InputError("unknown property '" + name + "'");
        s.set(*idx);
    }
    return s;
}

BitSet extent_of(const FormalContext& ctx, const BitSet& b) {
    if (b.size() != ctx.property_count())
        throw std::invalid_argument("property set does not match the context");
    BitSet extent = BitSet::full(ctx.object_count());
    b.for_each([&](std::size_t y) { extent &= ctx.property_column(y); });
    return extent;
}

BitSet intent_of(const FormalContext& ctx, const BitSet& a) {
    if (a.size() != ctx.object_count())
        throw std::invalid_argument("object set does not match the context");
    BitSet intent = BitSet::full(ctx.property_count());
    a.for_each([&](std::size_t x) { intent &= ctx.object_row(x); });
    return intent;
}

bool is_formal_concept(const FormalContext& ctx, const BitSet& a, const BitSet& b) {
    return extent_of(ctx, b) == a && intent_of(ctx, a) == b;
}

namespace {

BitSet closure(const FormalContext& ctx, const BitSet& b) {
    return intent_of(ctx, extent_of(ctx, b));
}

// Ganter's next-closure step: the lectic successor of intent among closed
// property sets, or nullopt after the full set. Property 0 is the most
// significant position of the lectic order.
std::optional<BitSet> next_closure(const FormalContext& ctx, BitSet intent) {
    const std::size_t m = ctx.property_count();
    for (std::size_t k = m; k-- > 0;) {
        if (intent.test(k)) {
            intent.reset(k);
            continue;
        }
        BitSet candidate = intent;
        candidate.set(k);
        BitSet closed = closure(ctx, candidate);
        // Canonicity: the closure must not introduce properties before k.
        bool canonical = true;
        (closed - intent).for_each([&](std::size_t y) {
            if (y < k) canonical = false;
        });
        if (canonical) return closed;
    }
    return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> cover_relation(
    const std::vector<FormalConcept>& concepts) {
    const std::size_t n = concepts.size();
    auto below = [&](std::size_t i, std::size_t j) {
        return i != j && concepts[i].extent.is_subset_of(concepts[j].extent);
    };
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!below(i, j)) continue;
            bool direct = true;
            for (std::size_t k = 0; k < n && direct; ++k)
                if (below(i, k) && below(k, j)) direct = false;
            if (direct) covers.emplace_back(i, j);
        }
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

}  // namespace

ConceptLattice all_concepts(const FormalContext& ctx, std::size_t max_properties) {
    if (ctx.property_count() > max_properties)
        throw InputError("context has " + std::to_string(ctx.property_count()) +
                         " properties, above the enumeration bound of " +
                         std::to_string(max_properties));

    ConceptLattice lattice;
    BitSet intent = closure(ctx, BitSet(ctx.property_count()));
    while (true) {
        lattice.concepts.push_back({extent_of(ctx, intent), intent});
        auto next = next_closure(ctx, intent);
        if (!next) break;
        intent = std::move(*next);
    }
    lattice.covers = cover_relation(lattice.concepts);
    return lattice;
}

FormalContext context_from_information_system(const InformationSystem& sys) {
    const std::vector<Descriptor> descriptors = descriptor_universe(sys);
    std::vector<std::string> properties;
    properties.reserve(descriptors.size());
    for (const auto& d : descriptors) properties.push_back(d.attribute + "=" + d.value);

    std::vector<std::pair<std::size_t, std::size_t>> incidence;
    for (std::size_t d = 0; d < descriptors.size(); ++d) {
        const std::size_t attr = *sys.attribute_index(descriptors[d].attribute);
        for (std::size_t i = 0; i < sys.object_count(); ++i)
            if (sys.value(i, attr) == descriptors[d].value) incidence.emplace_back(i, d);
    }
    return FormalContext(sys.objects(), std::move(properties), incidence);
}

FormalContext load_context(const std::vector<std::vector<std::string>>& records) {
    if (records.empty()) throw InputError("missing header record");
    const auto& header = records.front();
    if (header.empty() || header[0] != "id")
        throw InputError("first header column must be 'id'");
    if (header.size() < 2) throw InputError("empty property set");

    std::vector<std::string> properties(header.begin() + 1, header.end());
    std::vector<std::string> objects;
    std::vector<std::pair<std::size_t, std::size_t>> incidence;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& row = records[r];
        if (row.size() != header.size())
            throw InputError("ragged row " + std::to_string(r) + ": expected " +
                             std::to_string(header.size()) + " cells, got " +
                             std::to_string(row.size()));
        objects.push_back(row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) {
            if (row[c] == "1")
                incidence.emplace_back(r - 1, c - 1);
            else if (row[c] != "0")
                throw InputError("cell at row " + std::to_string(r) + ", column " +
                                 std::to_string(c + 1) + " must be 0 or 1, got '" + row[c] +
                                 "'");
        }
    }
    return FormalContext(std::move(objects), std::move(properties), incidence);
}

FormalContext load_context_file(const std::string& path) {
    return load_context(read_delimited_file(path));
}

std::string concept_label(const FormalContext& ctx, const FormalConcept& c) {
    return format_set(ctx.objects(), c.extent) + "|" + format_set(ctx.properties(), c.intent);
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void write_dot(std::ostream& out, const FormalContext& ctx, const ConceptLattice& lattice) {
    out << "digraph concept_lattice {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.concepts.size(); ++i)
        out << "  n" << i << " [label=" << dot_quote(concept_label(ctx, lattice.concepts[i]))
            << "];\n";
    for (const auto& [below, above] : lattice.covers)
        out << "  n" << below << " -> n" << above << ";\n";
    out << "}\n";
}

}  // namespace rough
