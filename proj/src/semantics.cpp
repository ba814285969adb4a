#include "laterproof/semantics.hpp"

#include <algorithm>
#include <cstdlib>

namespace laterproof {

UnknownWorld::UnknownWorld(int w) : ModelError("unknown world: " + std::to_string(w)) {}

UnknownAtom::UnknownAtom(const std::string& name)
    : ModelError("no valuation row for atom '" + name +
                 "' (atoms false everywhere still need an empty row)") {}

// ---------------------------------------------------------------------------
// Frame checking

namespace {

std::string wpair(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Cycle detection over the raw relation; colors: 0 new, 1 on stack, 2 done.
bool has_cycle(const std::set<int>& worlds, const std::set<std::pair<int, int>>& rel) {
    std::map<int, std::vector<int>> adj;
    for (const auto& [a, b] : rel) adj[a].push_back(b);
    std::map<int, int> color;
    for (int w : worlds) color[w] = 0;

    std::vector<std::pair<int, std::size_t>> stack;
    for (int start : worlds) {
        if (color[start] != 0) continue;
        stack.push_back({start, 0});
        color[start] = 1;
        while (!stack.empty()) {
            auto& [w, i] = stack.back();
            auto& next = adj[w];
            if (i < next.size()) {
                int x = next[i++];
                if (color[x] == 1) return true;
                if (color[x] == 0) {
                    color[x] = 1;
                    stack.push_back({x, 0});
                }
            } else {
                color[w] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

}  // namespace

std::vector<std::string> frame_check(const KripkeModel& m, LogicId logic) {
    std::vector<std::string> out;

    for (const auto& [a, b] : m.rel) {
        if (!m.worlds.count(a) || !m.worlds.count(b))
            out.push_back("relation endpoint outside the world set: " + wpair(a, b));
    }
    for (const auto& [atom, ext] : m.valuation) {
        for (int w : ext)
            if (!m.worlds.count(w))
                out.push_back("valuation of '" + atom + "' mentions unknown world " +
                              std::to_string(w));
    }

    for (const auto& [a, b] : m.rel)
        for (const auto& [c, d] : m.rel)
            if (b == c && !m.rel.count({a, d}))
                out.push_back("not transitive: " + wpair(a, b) + " and " + wpair(c, d) +
                              " without " + wpair(a, d));

    if (has_cycle(m.worlds, m.rel))
        out.push_back("relation has a cycle (must be converse-well-founded)");

    for (const auto& [atom, ext] : m.valuation) {
        for (int w : ext)
            for (const auto& [a, b] : m.rel)
                if (a == w && !ext.count(b))
                    out.push_back("valuation of '" + atom + "' is not persistent along " +
                                  wpair(a, b));
    }

    if (logic == LogicId::Lc) {
        for (int a : m.worlds)
            for (int b : m.worlds)
                if (a < b && !m.rel.count({a, b}) && !m.rel.count({b, a}))
                    out.push_back("worlds " + std::to_string(a) + " and " + std::to_string(b) +
                                  " are incomparable (linear frames forbid this)");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Forcing

namespace {

std::vector<int> strict_successors(const KripkeModel& m, int w) {
    std::vector<int> out;
    for (const auto& [a, b] : m.rel)
        if (a == w) out.push_back(b);
    return out;
}

}  // namespace

bool forces(const KripkeModel& m, int w, const Formula& f) {
    if (!m.worlds.count(w)) throw UnknownWorld(w);
    switch (f.kind()) {
        case Kind::Atom: {
            auto it = m.valuation.find(f.atom_name());
            if (it == m.valuation.end()) throw UnknownAtom(f.atom_name());
            return it->second.count(w) != 0;
        }
        case Kind::Top: return true;
        case Kind::Bot: return false;
        case Kind::And: return forces(m, w, f.left()) && forces(m, w, f.right());
        case Kind::Or: return forces(m, w, f.left()) || forces(m, w, f.right());
        case Kind::Imp: {
            if (forces(m, w, f.left()) && !forces(m, w, f.right())) return false;
            for (int x : strict_successors(m, w))
                if (forces(m, x, f.left()) && !forces(m, x, f.right())) return false;
            return true;
        }
        case Kind::Simp: {
            for (int x : strict_successors(m, w))
                if (forces(m, x, f.left()) && !forces(m, x, f.right())) return false;
            return true;
        }
        case Kind::Later: {
            for (int x : strict_successors(m, w))
                if (!forces(m, x, f.body())) return false;
            return true;
        }
    }
    return false;
}

bool refutes(const KripkeModel& m, int w, const Sequent& s) {
    for (const Formula& f : s.ante)
        if (!forces(m, w, f)) return false;
    for (const Formula& f : s.succ)
        if (forces(m, w, f)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Chain-model oracle

OracleBudget oracle_budget_from_env() {
    OracleBudget b;
    const char* env = std::getenv("LATERPROOF_BUDGET");
    if (!env || !*env) return b;
    std::string s(env);
    auto bad = [&]() {
        throw std::runtime_error("LATERPROOF_BUDGET must be 'atoms:len' or 'len', got '" + s +
                                 "'");
    };
    auto to_positive = [&](const std::string& part) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(part, &used);
        } catch (const std::exception&) {
            bad();
        }
        if (used != part.size() || v < 1) bad();
        return v;
    };
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        b.max_len = to_positive(s);
    } else {
        b.max_atoms = to_positive(s.substr(0, colon));
        b.max_len = to_positive(s.substr(colon + 1));
    }
    return b;
}

BudgetExceeded::BudgetExceeded(const Formula& f, const OracleBudget& b)
    : std::runtime_error("oracle budget exceeded for '" + f.text() + "' (" +
                         std::to_string(atom_names(f).size()) + " atoms, length " +
                         std::to_string(f.length()) + "; budget " + std::to_string(b.max_atoms) +
                         " atoms, length " + std::to_string(b.max_len) +
                         "; set LATERPROOF_BUDGET to raise)") {}

namespace {

// On a rooted chain a persistent valuation gives every formula a threshold:
// the first world where it becomes true (n+1 = nowhere). Evaluation over the
// flattened formula then stays allocation-free inside the model loop.
struct FlatNode {
    Kind kind;
    int atom = -1;  // index into the threshold vector
    int c1 = -1, c2 = -1;
};

int flatten(const Formula& f, std::map<std::string, int>& atom_ix, std::vector<FlatNode>& out) {
    FlatNode n;
    n.kind = f.kind();
    switch (f.kind()) {
        case Kind::Atom: {
            auto [it, fresh] = atom_ix.try_emplace(f.atom_name(), static_cast<int>(atom_ix.size()));
            (void)fresh;
            n.atom = it->second;
            break;
        }
        case Kind::And:
        case Kind::Or:
        case Kind::Imp:
        case Kind::Simp:
            n.c1 = flatten(f.left(), atom_ix, out);
            n.c2 = flatten(f.right(), atom_ix, out);
            break;
        case Kind::Later: n.c1 = flatten(f.body(), atom_ix, out); break;
        default: break;
    }
    out.push_back(n);
    return static_cast<int>(out.size() - 1);
}

// Threshold of every node on the n-world chain, given atom thresholds in
// 1..n+1. Root world is 1; the formula holds there iff the result is 1.
int eval_thresholds(const std::vector<FlatNode>& nodes, const std::vector<int>& thr, int n,
                    std::vector<int>& scratch) {
    scratch.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const FlatNode& nd = nodes[i];
        int v = 0;
        switch (nd.kind) {
            case Kind::Atom: v = thr[nd.atom]; break;
            case Kind::Top: v = 1; break;
            case Kind::Bot: v = n + 1; break;
            case Kind::And: v = std::max(scratch[nd.c1], scratch[nd.c2]); break;
            case Kind::Or: v = std::min(scratch[nd.c1], scratch[nd.c2]); break;
            case Kind::Imp:
                v = scratch[nd.c1] >= scratch[nd.c2] ? 1 : scratch[nd.c2];
                break;
            case Kind::Simp:
                v = scratch[nd.c1] >= scratch[nd.c2] ? 1 : scratch[nd.c2] - 1;
                break;
            case Kind::Later: v = std::max(1, scratch[nd.c1] - 1); break;
        }
        scratch[i] = v;
    }
    return scratch.back();
}

}  // namespace

bool lc_validity_oracle(const Formula& f) {
    return lc_validity_oracle(f, oracle_budget_from_env());
}

bool lc_validity_oracle(const Formula& f, const OracleBudget& budget) {
    std::map<std::string, int> atom_ix;
    std::vector<FlatNode> nodes;
    flatten(f, atom_ix, nodes);
    int k = static_cast<int>(atom_ix.size());
    if (k > budget.max_atoms || f.length() > budget.max_len) throw BudgetExceeded(f, budget);

    std::vector<int> thr(k);
    std::vector<int> scratch;
    for (int n = 1; n <= f.length() + 1; ++n) {
        std::fill(thr.begin(), thr.end(), 1);
        while (true) {
            if (eval_thresholds(nodes, thr, n, scratch) != 1) return false;
            int i = 0;
            while (i < k && thr[i] == n + 1) thr[i++] = 1;
            if (i == k) break;
            ++thr[i];
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Stage semantics

ExtNat ExtNat::of(std::uint64_t v) {
    if (v == kInf) throw std::invalid_argument("ExtNat::of: value reserved for infinity");
    return ExtNat(v);
}

std::uint64_t ExtNat::finite() const {
    if (is_inf()) throw std::logic_error("ExtNat::finite on infinity");
    return v_;
}

UnassignedAtom::UnassignedAtom(const std::string& name)
    : std::runtime_error("no stage value assigned to atom '" + name + "'") {}

namespace {

ExtNat atom_value(const TreesAssignment& a, const std::string& name) {
    auto it = a.find(name);
    if (it == a.end()) throw UnassignedAtom(name);
    return it->second;
}

}  // namespace

ExtNat trees_value(const TreesAssignment& a, const Formula& f) {
    switch (f.kind()) {
        case Kind::Atom: return atom_value(a, f.atom_name());
        case Kind::Top: return ExtNat::inf();
        case Kind::Bot: return ExtNat::of(0);
        case Kind::And: return std::min(trees_value(a, f.left()), trees_value(a, f.right()));
        case Kind::Or: return std::max(trees_value(a, f.left()), trees_value(a, f.right()));
        case Kind::Imp: {
            ExtNat l = trees_value(a, f.left()), r = trees_value(a, f.right());
            return l <= r ? ExtNat::inf() : r;
        }
        case Kind::Simp: {
            ExtNat l = trees_value(a, f.left()), r = trees_value(a, f.right());
            return l <= r ? ExtNat::inf() : r.succ();
        }
        case Kind::Later: return trees_value(a, f.body()).succ();
    }
    return ExtNat::of(0);
}

bool forces_trees(const TreesAssignment& a, std::uint64_t j, const Formula& f) {
    if (j < 1) throw std::invalid_argument("forces_trees: stages start at 1");
    switch (f.kind()) {
        case Kind::Atom: {
            ExtNat v = atom_value(a, f.atom_name());
            return v.is_inf() || j <= v.finite();
        }
        case Kind::Top: return true;
        case Kind::Bot: return false;
        case Kind::And: return forces_trees(a, j, f.left()) && forces_trees(a, j, f.right());
        case Kind::Or: return forces_trees(a, j, f.left()) || forces_trees(a, j, f.right());
        case Kind::Imp: {
            for (std::uint64_t k = 1; k <= j; ++k)
                if (forces_trees(a, k, f.left()) && !forces_trees(a, k, f.right())) return false;
            return true;
        }
        case Kind::Simp: {
            for (std::uint64_t k = 1; k < j; ++k)
                if (forces_trees(a, k, f.left()) && !forces_trees(a, k, f.right())) return false;
            return true;
        }
        case Kind::Later: {
            for (std::uint64_t k = 1; k < j; ++k)
                if (!forces_trees(a, k, f.body())) return false;
            return true;
        }
    }
    return false;
}

std::vector<bool> forces_trees_profile(const TreesAssignment& a, std::uint64_t max_j,
                                       const Formula& f) {
    std::vector<bool> out(max_j);
    switch (f.kind()) {
        case Kind::Atom: {
            ExtNat v = atom_value(a, f.atom_name());
            for (std::uint64_t j = 1; j <= max_j; ++j)
                out[j - 1] = v.is_inf() || j <= v.finite();
            break;
        }
        case Kind::Top: std::fill(out.begin(), out.end(), true); break;
        case Kind::Bot: break;
        case Kind::And:
        case Kind::Or: {
            auto l = forces_trees_profile(a, max_j, f.left());
            auto r = forces_trees_profile(a, max_j, f.right());
            for (std::uint64_t j = 0; j < max_j; ++j)
                out[j] = f.is(Kind::And) ? (l[j] && r[j]) : (l[j] || r[j]);
            break;
        }
        case Kind::Imp: {
            auto l = forces_trees_profile(a, max_j, f.left());
            auto r = forces_trees_profile(a, max_j, f.right());
            bool acc = true;
            for (std::uint64_t j = 0; j < max_j; ++j) {
                acc = acc && (!l[j] || r[j]);
                out[j] = acc;
            }
            break;
        }
        case Kind::Simp: {
            auto l = forces_trees_profile(a, max_j, f.left());
            auto r = forces_trees_profile(a, max_j, f.right());
            bool acc = true;  // over stages strictly below j
            for (std::uint64_t j = 0; j < max_j; ++j) {
                out[j] = acc;
                acc = acc && (!l[j] || r[j]);
            }
            break;
        }
        case Kind::Later: {
            auto b = forces_trees_profile(a, max_j, f.body());
            bool acc = true;
            for (std::uint64_t j = 0; j < max_j; ++j) {
                out[j] = acc;
                acc = acc && b[j];
            }
            break;
        }
    }
    return out;
}

}  // namespace laterproof
