#pragma once

#include <span>
#include <string>
#include <vector>

#include "rough/bitset.hpp"
#include "rough/formula.hpp"
#include "rough/information_system.hpp"

namespace rough {

// Kripke model over a table: worlds are the objects, a world accesses
// exactly the worlds in its indiscernibility block, and an atom (a,v) holds
// at a world iff the table assigns value v to attribute a there. With an
// equivalence accessibility the box/diamond clauses coincide with the
// lower/upper approximation operators.
class KripkeModel {
public:
    // Frame = indiscernibility partition on attrs.
    static KripkeModel build(const InformationSystem& sys, std::span<const std::string> attrs);

    // Test-only: a frame with arbitrary accessibility, one successor set
    // per world over the system's objects. Exists so the axiom checker can
    // be shown to fail on non-equivalence frames; not part of the public
    // modeling surface.
    static KripkeModel arbitrary_frame_for_tests(const InformationSystem& sys,
                                                 std::vector<BitSet> accessibility);

    std::size_t world_count() const { return system_.object_count(); }
    const std::vector<std::string>& worlds() const { return system_.objects(); }
    const InformationSystem& system() const { return system_; }

    // Successor set of one world.
    const BitSet& accessible_from(std::size_t world) const { return accessibility_[world]; }

    // Number of distinct successor sets; for an equivalence frame this is
    // the number of elementary sets.
    std::size_t block_count() const;

private:
    KripkeModel(InformationSystem sys, std::vector<BitSet> accessibility)
        : system_(std::move(sys)), accessibility_(std::move(accessibility)) {}

    InformationSystem system_;
    std::vector<BitSet> accessibility_;
};

// Worlds where f holds. Box: all accessible worlds satisfy the operand;
// diamond: some accessible world does. Boolean connectives as in meaning().
BitSet extension(const KripkeModel& model, const Formula& f);

// Pointwise view of extension; throws InputError on an unknown world id.
bool holds_at(const KripkeModel& model, const std::string& world, const Formula& f);

// One failed axiom instance at one world.
struct S5Violation {
    std::string axiom;  // "K", "T", "4" or "5"
    std::string phi;
    std::string psi;  // empty for the unary schemata
    std::string world;
};

struct S5Report {
    std::vector<S5Violation> violations;
    std::size_t instances_checked = 0;

    bool valid() const { return violations.empty(); }
};

// Semantic check of the S5 schemata over sample formulas: for every phi
// (and every ordered pair phi, psi for K) the extensions of
//   K: box(phi -> psi) -> (box phi -> box psi)
//   T: box phi -> phi
//   4: box phi -> box box phi
//   5: dia phi -> box dia phi
// must be the full universe. Every world falsifying an instance is
// reported. Equivalence frames validate all four, so a violation on a
// model built with KripkeModel::build signals an implementation bug.
S5Report check_s5_axioms(const KripkeModel& model, std::span<const Formula> samples);

}  // namespace rough
