#include "rough/s5.hpp"

#include <algorithm>
#include <stdexcept>

#include "rough/descriptor.hpp"
#include "rough/errors.hpp"

namespace rough {

KripkeModel KripkeModel::build(const InformationSystem& sys,
                               std::span<const std::string> attrs) {
    const ApproximationSpace space = indiscernibility(sys, attrs);
    std::vector<BitSet> accessibility;
    accessibility.reserve(sys.object_count());
    for (std::size_t w = 0; w < sys.object_count(); ++w)
        accessibility.push_back(space.block_containing(w));
    return KripkeModel(sys, std::move(accessibility));
}

KripkeModel KripkeModel::arbitrary_frame_for_tests(const InformationSystem& sys,
                                                   std::vector<BitSet> accessibility) {
    if (accessibility.size() != sys.object_count())
        throw std::invalid_argument("one successor set per world required");
    for (const BitSet& s : accessibility)
        if (s.size() != sys.object_count())
            throw std::invalid_argument("successor set does not match the universe");
    return KripkeModel(sys, std::move(accessibility));
}

std::size_t KripkeModel::block_count() const {
    std::vector<const BitSet*> distinct;
    for (const BitSet& s : accessibility_) {
        bool seen = false;
        for (const BitSet* d : distinct)
            if (*d == s) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(&s);
    }
    return distinct.size();
}

BitSet extension(const KripkeModel& model, const Formula& f) {
    const std::size_t n = model.world_count();
    switch (f.kind()) {
    case Formula::Kind::truth:
        return BitSet::full(n);
    case Formula::Kind::falsity:
        return BitSet(n);
    case Formula::Kind::atom:
        return meaning(model.system(), f);
    case Formula::Kind::negation:
        return ~extension(model, f.child());
    case Formula::Kind::conjunction:
        return extension(model, f.left()) & extension(model, f.right());
    case Formula::Kind::disjunction:
        return extension(model, f.left()) | extension(model, f.right());
    case Formula::Kind::box: {
        const BitSet inner = extension(model, f.child());
        BitSet out(n);
        for (std::size_t w = 0; w < n; ++w)
            if (model.accessible_from(w).is_subset_of(inner)) out.set(w);
        return out;
    }
    case Formula::Kind::diamond: {
        const BitSet inner = extension(model, f.child());
        BitSet out(n);
        for (std::size_t w = 0; w < n; ++w)
            if (model.accessible_from(w).intersects(inner)) out.set(w);
        return out;
    }
    }
    throw std::invalid_argument("corrupt formula");
}

bool holds_at(const KripkeModel& model, const std::string& world, const Formula& f) {
    auto idx = model.system().object_index(world);
    if (!idx) throw InputError("unknown world '" + world + "'");
    return extension(model, f).test(*idx);
}

namespace {

void check_schema(const KripkeModel& model, const char* axiom, const Formula& instance,
                  const Formula& phi, const Formula* psi, S5Report& report) {
    ++report.instances_checked;
    const BitSet ext = extension(model, instance);
    if (ext == BitSet::full(model.world_count())) return;
    (~ext).for_each([&](std::size_t w) {
        report.violations.push_back(
            {axiom, phi.str(), psi ? psi->str() : std::string{}, model.worlds()[w]});
    });
}

}  // namespace

S5Report check_s5_axioms(const KripkeModel& model, std::span<const Formula> samples) {
    S5Report report;
    for (const Formula& phi : samples) {
        // T: box phi -> phi
        check_schema(model, "T", Formula::implication(Formula::box(phi), phi), phi, nullptr,
                     report);
        // 4: box phi -> box box phi
        check_schema(model, "4",
                     Formula::implication(Formula::box(phi), Formula::box(Formula::box(phi))),
                     phi, nullptr, report);
        // 5: dia phi -> box dia phi
        check_schema(
            model, "5",
            Formula::implication(Formula::diamond(phi), Formula::box(Formula::diamond(phi))),
            phi, nullptr, report);
        // K: box(phi -> psi) -> (box phi -> box psi)
        for (const Formula& psi : samples) {
            Formula instance = Formula::implication(
                Formula::box(Formula::implication(phi, psi)),
                Formula::implication(Formula::box(phi), Formula::box(psi)));
            check_schema(model, "K", instance, phi, &psi, report);
        }
    }
    return report;
}

}  // namespace rough
