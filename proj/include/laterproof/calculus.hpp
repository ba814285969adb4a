#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laterproof/sequent.hpp"

// The inference rules as premise-generating functions, read backward: given a
// goal sequent, each function produces the premise sequents whose provability
// would establish the goal. A Derivation records one complete application
// tree; check_derivation replays every node against these same functions.

namespace laterproof {

enum class LogicId { Lc, Km };

const std::string& logic_text(LogicId l);
std::optional<LogicId> logic_from_text(const std::string& s);

struct RuleInstance {
    RuleName rule;
    // The exhibited formula(s): one formula for static and km rules, the full
    // eventuality list for Step, the shared/constant witness for closures.
    FormulaSet principal;
    std::vector<Sequent> premises;
};

// One instance per applicable (static rule, principal formula) pair, ordered
// by principal formula, antecedent side first on ties. Premises use set
// semantics: the principal is removed, its pieces are unioned in.
//   and-left   G, a & b => D   -:  [G, a, b => D]
//   and-right  G => a & b, D   -:  [G => a, D    ; G => b, D]
//   or-left    G, a | b => D   -:  [G, a => D    ; G, b => D]
//   or-right   G => a | b, D   -:  [G => a, b, D]
//   imp-right  G => a -> b, D  -:  [G, a => b, D ; G => a ~> b, D]
//   imp-left   G, a -> b => D  -:  [G, a ~> b => a, D ; G, a ~> b, b => D]
std::vector<RuleInstance> static_rule_instances(const Sequent& s);

// The linear-frame transition. Applies only when s is saturated, not closed,
// and has at least one succedent '~>' or '@' formula; all of them are
// principal at once. With compartments
//   sigma_l, @Theta, sGamma => [a1~>b1 .. ak~>bk], [@c1 .. @cn], sigma_r
// and writing ->Gamma = {x -> y : x ~> y in sGamma}, Theta = {t : @t in
// @Theta}, ->Delta = {aj -> bj : all j}, Phi = {c1 .. cn}, the premises are:
//   i in 1..k:  sigma_l, ->Gamma, Theta, @Theta, ai~>bi, ai
//                 => bi, (->Delta minus ai->bi), Phi
//   i in 1..n:  sigma_l, ->Gamma, Theta, @Theta, @ci  =>  ->Delta, Phi
// Returns nullopt when any side condition fails; the caller then treats s as
// a refutable leaf.
std::optional<RuleInstance> lc_step_instance(const Sequent& s);

// The branching-frame transitions. Applies under the same closure/saturation
// side conditions; one single-premise instance per succedent '~>' or '@'
// formula, the rest of the succedent discarded:
//   km-simp-right on a ~> b:  sigma_l, Theta, @Theta, ->Gamma, a~>b, a => b
//   km-later-right on @c:     sigma_l, Theta, @Theta, ->Gamma, @c => c
// Instances are ordered '~>' choices first, then '@' choices, each in the
// deterministic formula order; the search backtracks through them.
std::vector<RuleInstance> km_step_instances(const Sequent& s);

struct Derivation {
    Sequent conclusion;
    RuleName rule;
    FormulaSet principal;
    std::vector<Derivation> premises;
};

// Replays the whole tree: every leaf must be a genuine termination rule and
// every inner node's recorded premises must match the recomputed instance for
// (rule, principal) under the given logic. Returns a description of the first
// offending node (path from the root) or nullopt if the tree is a proof.
std::optional<std::string> check_derivation_error(const Derivation& d, LogicId logic);

bool check_derivation(const Derivation& d, LogicId logic);

}  // namespace laterproof
