#include "rough/descriptor.hpp"

#include <stdexcept>
#include <unordered_set>

#include "rough/approximation.hpp"
#include "rough/errors.hpp"

namespace rough {

namespace {

BitSet atom_extension(const InformationSystem& sys, const std::string& attribute,
                      const std::string& value) {
    auto attr = sys.attribute_index(attribute);
    if (!attr) throw InputError("unknown attribute '" + attribute + "'");
    BitSet s(sys.object_count());
    for (std::size_t i = 0; i < sys.object_count(); ++i)
        if (sys.value(i, *attr) == value) s.set(i);
    return s;
}

}  // namespace

BitSet meaning(const InformationSystem& sys, const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::truth:
        return sys.universe();
    case Formula::Kind::falsity:
        return BitSet(sys.object_count());
    case Formula::Kind::atom:
        return atom_extension(sys, f.attribute(), f.value());
    case Formula::Kind::negation:
        return ~meaning(sys, f.child());
    case Formula::Kind::conjunction:
        return meaning(sys, f.left()) & meaning(sys, f.right());
    case Formula::Kind::disjunction:
        return meaning(sys, f.left()) | meaning(sys, f.right());
    case Formula::Kind::box:
    case Formula::Kind::diamond:
        throw std::invalid_argument("modal operator outside a Kripke model");
    }
    throw std::invalid_argument("corrupt formula");
}

Formula describe_set(const InformationSystem& sys, std::span<const std::string> attrs,
                     const BitSet& x, ApproxMode mode) {
    const ApproximationSpace space = indiscernibility(sys, attrs);
    if (x.size() != space.universe_size())
        throw std::invalid_argument("object set does not match the system's universe");
    const std::vector<std::size_t> chosen = sys.attribute_subset(attrs);

    bool have = false;
    Formula result = Formula::falsity();
    for (const BitSet& block : space.blocks()) {
        const bool qualifies =
            mode == ApproxMode::lower ? block.is_subset_of(x) : block.intersects(x);
        if (!qualifies) continue;
        const std::size_t witness = block.find_first();
        Formula conj = Formula::atom(sys.attributes()[chosen[0]], sys.value(witness, chosen[0]));
        for (std::size_t k = 1; k < chosen.size(); ++k)
            conj = Formula::conjunction(
                std::move(conj),
                Formula::atom(sys.attributes()[chosen[k]], sys.value(witness, chosen[k])));
        result = have ? Formula::disjunction(std::move(result), std::move(conj))
                      : std::move(conj);
        have = true;
    }
    return result;
}

std::string to_dnf_string(const Formula& f) {
    if (f.kind() == Formula::Kind::disjunction)
        return to_dnf_string(f.left()) + " or " + to_dnf_string(f.right());
    if (f.kind() == Formula::Kind::conjunction) return "(" + f.str() + ")";
    return f.str();
}

std::vector<Descriptor> descriptor_universe(const InformationSystem& sys) {
    std::vector<Descriptor> out;
    for (std::size_t j = 0; j < sys.attribute_count(); ++j) {
        std::unordered_set<std::string> seen;
        for (std::size_t i = 0; i < sys.object_count(); ++i) {
            const std::string& v = sys.value(i, j);
            if (seen.insert(v).second) out.push_back({sys.attributes()[j], v});
        }
    }
    return out;
}

DescriptiveSystem::DescriptiveSystem(
    std::vector<std::string> objects, std::vector<Descriptor> descriptors,
    const std::vector<std::pair<std::size_t, std::size_t>>& description)
    : objects_(std::move(objects)), descriptors_(std::move(descriptors)) {
    rows_.assign(objects_.size(), BitSet(descriptors_.size()));
    for (const auto& [object, descriptor] : description) {
        if (object >= objects_.size() || descriptor >= descriptors_.size())
            throw std::invalid_argument("description pair outside objects x descriptors");
        rows_[object].set(descriptor);
    }
}

DescriptiveSystem DescriptiveSystem::from_information_system(const InformationSystem& sys) {
    std::vector<Descriptor> descriptors = descriptor_universe(sys);
    std::vector<std::pair<std::size_t, std::size_t>> description;
    for (std::size_t d = 0; d < descriptors.size(); ++d) {
        const std::size_t attr = *sys.attribute_index(descriptors[d].attribute);
        for (std::size_t i = 0; i < sys.object_count(); ++i)
            if (sys.value(i, attr) == descriptors[d].value) description.emplace_back(i, d);
    }
    return DescriptiveSystem(sys.objects(), std::move(descriptors), description);
}

bool DescriptiveSystem::functional() const {
    for (std::size_t i = 0; i < objects_.size(); ++i) {
        std::unordered_set<std::string> seen;
        bool ok = true;
        rows_[i].for_each([&](std::size_t d) {
            if (!seen.insert(descriptors_[d].attribute).second) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace rough
