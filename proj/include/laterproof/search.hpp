#pragma once

#include <cstdint>
#include <optional>

#include "laterproof/calculus.hpp"
#include "laterproof/semantics.hpp"

// Backward proof search. Each sequent is handled by the first applicable
// phase: close it by a termination rule, else decompose one top-level
// connective (static phase), else hand the saturated sequent to the
// transition for the requested logic. Static rules are invertible, so their
// premise choice never needs revisiting; the linear-frame step is forced; the
// branching-frame rules backtrack over the succedent choices.
//
// Failure is as informative as success: every refuted branch assembles a
// finite countermodel on the way back down, so a NotProvable outcome carries
// a model and a world that refute the goal.

namespace laterproof {

struct SearchStats {
    std::uint64_t sequents_visited = 0;
    // Most transitional applications on any single root-to-leaf branch; for
    // linear search this stays within the goal's total length.
    std::uint64_t step_applications_max_per_branch = 0;
    // Longest root-to-leaf branch in sequents; stays within (total length)^2.
    std::uint64_t max_branch_length = 0;
    // Failed branching-frame choices that were followed by trying another.
    std::uint64_t backtracks = 0;
};

struct SearchOutcome {
    bool provable = false;
    std::optional<Derivation> derivation;  // set iff provable
    std::optional<KripkeModel> model;      // set iff not provable
    int refuting_world = -1;               // world of model refuting the goal
    SearchStats stats;
};

SearchOutcome prove(const Sequent& goal, LogicId logic);

// prove on the end-sequent  => f.
SearchOutcome prove_formula(const Formula& f, LogicId logic);

}  // namespace laterproof
