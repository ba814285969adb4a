#include "laterproof/search.hpp"

#include <algorithm>

namespace laterproof {

namespace {

struct Refutation {
    KripkeModel model;
    int world;
};

// Exactly one of the two is engaged.
struct Expansion {
    std::optional<Derivation> proof;
    std::optional<Refutation> refutation;
};

void ensure_atoms(KripkeModel& m, const std::set<std::string>& names) {
    for (const std::string& n : names) m.valuation.try_emplace(n);
}

// Restriction of m to w and everything reachable from it. Valuation keys are
// kept even when their extension becomes empty.
KripkeModel reachable_submodel(const KripkeModel& m, int w) {
    std::set<int> keep{w};
    std::vector<int> todo{w};
    while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (const auto& [a, b] : m.rel)
            if (a == x && keep.insert(b).second) todo.push_back(b);
    }
    KripkeModel out;
    out.worlds = keep;
    for (const auto& e : m.rel)
        if (keep.count(e.first) && keep.count(e.second)) out.rel.insert(e);
    for (const auto& [atom, ext] : m.valuation) {
        auto& row = out.valuation[atom];
        for (int x : ext)
            if (keep.count(x)) row.insert(x);
    }
    return out;
}

// Merges src into dst. World ids come from one per-search counter, so the
// carriers are disjoint already; if a caller ever violates that, src is
// shifted above dst's ids and the renamed root is returned.
int absorb_disjoint(KripkeModel& dst, const KripkeModel& src, int src_root) {
    int offset = 0;
    bool collision = std::any_of(src.worlds.begin(), src.worlds.end(),
                                 [&](int w) { return dst.worlds.count(w) != 0; });
    if (collision) {
        int dst_max = dst.worlds.empty() ? -1 : *dst.worlds.rbegin();
        int src_min = *src.worlds.begin();
        offset = dst_max + 1 - src_min;
    }
    for (int w : src.worlds) dst.worlds.insert(w + offset);
    for (const auto& [a, b] : src.rel) dst.rel.insert({a + offset, b + offset});
    for (const auto& [atom, ext] : src.valuation) {
        auto& row = dst.valuation[atom];
        for (int w : ext) row.insert(w + offset);
    }
    return src_root + offset;
}

class Searcher {
public:
    explicit Searcher(LogicId logic) : logic_(logic) {}

    SearchStats stats;

    Expansion expand(const Sequent& s, std::uint64_t depth, std::uint64_t steps) {
        ++stats.sequents_visited;
        stats.max_branch_length = std::max(stats.max_branch_length, depth + 1);
        stats.step_applications_max_per_branch =
            std::max(stats.step_applications_max_per_branch, steps);

        if (auto close = closed_by(s)) return {closing_leaf(s, *close), std::nullopt};
        if (!is_saturated(s)) return static_phase(s, depth, steps);
        return logic_ == LogicId::Lc ? lc_transition(s, depth, steps)
                                     : km_transition(s, depth, steps);
    }

private:
    LogicId logic_;
    int next_world_ = 0;

    int fresh_world() { return next_world_++; }

    static Derivation closing_leaf(const Sequent& s, RuleName rule) {
        FormulaSet principal;
        switch (rule) {
            case RuleName::Id: principal = s.ante.intersection(s.succ); break;
            case RuleName::BotLeft: principal = {Formula::bot()}; break;
            default: principal = {Formula::top()}; break;
        }
        return Derivation{s, rule, std::move(principal), {}};
    }

    // Refutable leaf: saturated, not closed, nothing for a transition to do.
    // A single world forcing exactly the antecedent atoms refutes it.
    Refutation stuck_leaf(const Sequent& s) {
        int w = fresh_world();
        KripkeModel m;
        m.worlds = {w};
        ensure_atoms(m, atom_names(s));
        for (const Formula& f : s.ante)
            if (f.is(Kind::Atom)) m.valuation[f.atom_name()].insert(w);
        return {std::move(m), w};
    }

    Expansion static_phase(const Sequent& s, std::uint64_t depth, std::uint64_t steps) {
        RuleInstance inst = static_rule_instances(s).front();
        Derivation node{s, inst.rule, std::move(inst.principal), {}};
        for (const Sequent& prem : inst.premises) {
            Expansion sub = expand(prem, depth + 1, steps);
            if (sub.refutation) {
                // Static rules are invertible: the same world refutes s.
                ensure_atoms(sub.refutation->model, atom_names(s));
                return {std::nullopt, std::move(sub.refutation)};
            }
            node.premises.push_back(std::move(*sub.proof));
        }
        return {std::move(node), std::nullopt};
    }

    Expansion lc_transition(const Sequent& s, std::uint64_t depth, std::uint64_t steps) {
        std::optional<RuleInstance> inst = lc_step_instance(s);
        if (!inst) return {std::nullopt, stuck_leaf(s)};
        Derivation node{s, RuleName::Step, inst->principal, {}};
        for (const Sequent& prem : inst->premises) {
            Expansion sub = expand(prem, depth + 1, steps + 1);
            if (sub.refutation)
                return {std::nullopt, lc_step_model(s, std::move(*sub.refutation))};
            node.premises.push_back(std::move(*sub.proof));
        }
        return {std::move(node), std::nullopt};
    }

    // A refuted step premise lifts to the conclusion by adding one fresh
    // world below the premise's refuting world. The result stays a chain.
    Refutation lc_step_model(const Sequent& s, Refutation sub) {
        KripkeModel m = reachable_submodel(sub.model, sub.world);
        int w0 = fresh_world();
        for (int x : m.worlds) m.rel.insert({w0, x});
        m.worlds.insert(w0);
        ensure_atoms(m, atom_names(s));
        for (const Formula& f : s.ante)
            if (f.is(Kind::Atom)) m.valuation[f.atom_name()].insert(w0);
        return {std::move(m), w0};
    }

    Expansion km_transition(const Sequent& s, std::uint64_t depth, std::uint64_t steps) {
        std::vector<RuleInstance> insts = km_step_instances(s);
        if (insts.empty()) return {std::nullopt, stuck_leaf(s)};
        std::vector<Refutation> failed;
        for (std::size_t i = 0; i < insts.size(); ++i) {
            Expansion sub = expand(insts[i].premises.front(), depth + 1, steps + 1);
            if (sub.proof) {
                Derivation node{s, insts[i].rule, std::move(insts[i].principal), {}};
                node.premises.push_back(std::move(*sub.proof));
                return {std::move(node), std::nullopt};
            }
            failed.push_back(std::move(*sub.refutation));
            if (i + 1 < insts.size()) ++stats.backtracks;
        }
        return {std::nullopt, km_step_model(s, std::move(failed))};
    }

    // Every choice failed; each failure refutes one succedent eventuality.
    // A fresh root below the disjoint union of all those models refutes them
    // simultaneously, hence refutes s.
    Refutation km_step_model(const Sequent& s, std::vector<Refutation> failed) {
        KripkeModel m;
        std::vector<int> roots;
        for (Refutation& r : failed)
            roots.push_back(absorb_disjoint(m, reachable_submodel(r.model, r.world), r.world));
        int w0 = fresh_world();
        for (int x : m.worlds) m.rel.insert({w0, x});
        m.worlds.insert(w0);
        ensure_atoms(m, atom_names(s));
        for (const Formula& f : s.ante)
            if (f.is(Kind::Atom)) m.valuation[f.atom_name()].insert(w0);
        return {std::move(m), w0};
    }
};

}  // namespace

SearchOutcome prove(const Sequent& goal, LogicId logic) {
    Searcher searcher(logic);
    Expansion e = searcher.expand(goal, 0, 0);
    SearchOutcome out;
    out.stats = searcher.stats;
    if (e.proof) {
        out.provable = true;
        out.derivation = std::move(e.proof);
    } else {
        out.provable = false;
        out.model = std::move(e.refutation->model);
        out.refuting_world = e.refutation->world;
    }
    return out;
}

SearchOutcome prove_formula(const Formula& f, LogicId logic) {
    return prove(Sequent{{}, {f}}, logic);
}

}  // namespace laterproof
