#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "laterproof/calculus.hpp"
#include "laterproof/formula.hpp"

// Finite Kripke models over a strict accessibility relation, the forcing
// relation, a brute-force validity oracle over rooted chains, and the
// stage-indexed truth-value semantics where a formula's value says up to
// which stage it stays true.

namespace laterproof {

// Worlds are plain integers. rel holds the strict relation only; the
// reflexive closure is applied where a connective calls for it.
struct KripkeModel {
    std::set<int> worlds;
    std::set<std::pair<int, int>> rel;
    std::map<std::string, std::set<int>> valuation;

    bool operator==(const KripkeModel& o) const {
        return worlds == o.worlds && rel == o.rel && valuation == o.valuation;
    }
};

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class UnknownWorld : public ModelError {
public:
    explicit UnknownWorld(int w);
};
// Raised when a formula mentions an atom the valuation has no row for. An
// atom false everywhere must still be listed, with an empty extension.
class UnknownAtom : public ModelError {
public:
    explicit UnknownAtom(const std::string& name);
};

// Frame and valuation diagnostics, empty when m is a legal model for the
// logic: endpoints in range, relation transitive and acyclic (equivalent to
// converse-well-founded on finite carriers, and with transitivity it forces
// irreflexivity), valuation persistent along rel; lc additionally requires
// any two distinct worlds to be related one way or the other.
std::vector<std::string> frame_check(const KripkeModel& m, LogicId logic);

// Forcing at a world. Atoms by valuation; & | pointwise; a -> b quantifies
// over w and everything strictly above it; a ~> b and @a over the strictly
// above worlds only. Throws UnknownWorld / UnknownAtom.
bool forces(const KripkeModel& m, int w, const Formula& f);

// Forcing for a whole sequent: w refutes s when every antecedent member is
// forced and every succedent member is not.
bool refutes(const KripkeModel& m, int w, const Sequent& s);

// Enumeration bounds for the brute-force oracle. The defaults keep the
// search space near 10^5 models; LATERPROOF_BUDGET ("atoms:len" or just a
// length) raises or lowers them process-wide.
struct OracleBudget {
    int max_atoms = 3;
    int max_len = 9;
};
OracleBudget oracle_budget_from_env();

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const Formula& f, const OracleBudget& b);
};

// Validity over linear frames, decided by brute force: f is valid iff it is
// forced at the root of every rooted chain of 1..len(f)+1 worlds under every
// persistent valuation of its atoms (an atom's extension on a chain is some
// upward-closed suffix). Independent of proof search; used to cross-check it.
bool lc_validity_oracle(const Formula& f);
bool lc_validity_oracle(const Formula& f, const OracleBudget& budget);

// ---------------------------------------------------------------------------
// Stage semantics: truth values are extended naturals. A formula with value
// v is true at stages 1..v and false above; infinity means true everywhere.

class ExtNat {
public:
    static ExtNat inf() { return ExtNat(kInf); }
    static ExtNat of(std::uint64_t v);

    bool is_inf() const { return v_ == kInf; }
    std::uint64_t finite() const;  // throws on infinity

    // +1, saturating at infinity.
    ExtNat succ() const { return is_inf() ? *this : ExtNat(v_ + 1); }

    bool operator==(const ExtNat& o) const { return v_ == o.v_; }
    bool operator!=(const ExtNat& o) const { return v_ != o.v_; }
    bool operator<(const ExtNat& o) const { return v_ < o.v_; }
    bool operator<=(const ExtNat& o) const { return v_ <= o.v_; }

    std::string text() const { return is_inf() ? "inf" : std::to_string(v_); }

private:
    explicit ExtNat(std::uint64_t v) : v_(v) {}
    static constexpr std::uint64_t kInf = UINT64_MAX;
    std::uint64_t v_;
};

using TreesAssignment = std::map<std::string, ExtNat>;

class UnassignedAtom : public std::runtime_error {
public:
    explicit UnassignedAtom(const std::string& name);
};

// Compositional truth value:
//   a & b = min, a | b = max, T = inf, F = 0,
//   a -> b = inf if v(a) <= v(b) else v(b),
//   a ~> b = inf if v(a) <= v(b) else v(b)+1,
//   @a     = v(a)+1.
ExtNat trees_value(const TreesAssignment& a, const Formula& f);

// Truth at one stage j >= 1 by direct recursion over the quantifier clauses:
// -> looks at all stages k <= j, ~> and @ at all k < j. The independent
// reference for trees_value; exponential, keep inputs small.
bool forces_trees(const TreesAssignment& a, std::uint64_t j, const Formula& f);

// forces_trees for all stages 1..max_j at once, computed bottom-up in
// O(len * max_j). profile[j-1] == forces_trees(a, j, f).
std::vector<bool> forces_trees_profile(const TreesAssignment& a, std::uint64_t max_j,
                                       const Formula& f);

}  // namespace laterproof
