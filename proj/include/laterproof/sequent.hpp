#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laterproof/formula.hpp"

// Sequents over formula sets, plus the classifiers backward proof search
// needs: which zero-premise rule closes a sequent, whether every top-level
// connective has been decomposed, and the compartment structure the
// transitional rules read off a saturated sequent.

namespace laterproof {

enum class RuleName {
    Id,
    BotLeft,
    TopRight,
    AndLeft,
    AndRight,
    OrLeft,
    OrRight,
    ImpLeft,
    ImpRight,
    Step,          // linear-frame transition, one premise per eventuality
    KmSimpRight,   // branching-frame transition on one '~>' succedent formula
    KmLaterRight   // branching-frame transition on one '@' succedent formula
};

const std::string& rule_name_text(RuleName r);
std::optional<RuleName> rule_name_from_text(const std::string& s);

struct Sequent {
    FormulaSet ante;
    FormulaSet succ;

    bool operator==(const Sequent& o) const { return ante == o.ante && succ == o.succ; }
    bool operator!=(const Sequent& o) const { return !(*this == o); }
    bool operator<(const Sequent& o) const {
        if (ante != o.ante) return ante < o.ante;
        return succ < o.succ;
    }

    // "p, q -> r => s"; members in the deterministic formula order.
    std::string text() const;
};

// Sum of the lengths of all member formulas, both sides. This is the measure
// the search complexity bounds are stated against.
int total_length(const Sequent& s);

// Atoms occurring anywhere in the sequent.
std::set<std::string> atom_names(const Sequent& s);

// Union of closure() over all member formulas.
FormulaSet closure(const Sequent& s);

// The zero-premise rule that closes s, if any. Priority: Id (sides share a
// formula), then BotLeft, then TopRight.
std::optional<RuleName> closed_by(const Sequent& s);

// True iff no &, | or -> occurs at top level on either side, i.e. every
// member is an atom, a constant, a '~>' formula or an '@' formula.
bool is_saturated(const Sequent& s);

// Succedent '~>' and '@' formulas not already present in the antecedent.
// These are the formulas a transitional rule still owes a witness for.
FormulaSet eventualities(const Sequent& s);

// Compartments of a saturated sequent as the transitional rules see it:
//   sigma_l | boxed_theta | simp_gamma  =>  simp_delta | boxed_phi | sigma_r
// sigma_l also absorbs a stray F on the left and sigma_r a stray T on the
// right; such sequents are closed and never reach a transitional rule.
struct StepPartition {
    FormulaSet sigma_l;               // atoms and T in the antecedent
    FormulaSet boxed_theta;           // @t in the antecedent
    FormulaSet simp_gamma;            // a ~> b in the antecedent
    std::vector<Formula> simp_delta;  // a ~> b in the succedent, ordered
    std::vector<Formula> boxed_phi;   // @c in the succedent, ordered
    FormulaSet sigma_r;               // atoms and F in the succedent
};

class NotSaturated : public std::logic_error {
public:
    explicit NotSaturated(const Sequent& s);
};

// Classifies every member of a saturated sequent into its compartment.
// Throws NotSaturated otherwise.
StepPartition step_partition(const Sequent& s);

}  // namespace laterproof
