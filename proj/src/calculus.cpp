#include "laterproof/calculus.hpp"

#include <algorithm>

namespace laterproof {

const std::string& logic_text(LogicId l) {
    static const std::string names[] = {"lc", "km"};
    return names[static_cast<int>(l)];
}

std::optional<LogicId> logic_from_text(const std::string& s) {
    if (s == "lc") return LogicId::Lc;
    if (s == "km") return LogicId::Km;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Static rules

std::vector<RuleInstance> static_rule_instances(const Sequent& s) {
    // Candidates ordered by principal formula, antecedent first on ties, so
    // the saturation phase is reproducible.
    struct Cand {
        Formula f;
        bool in_succ;
    };
    std::vector<Cand> cands;
    for (const Formula& f : s.ante)
        if (f.is(Kind::And) || f.is(Kind::Or) || f.is(Kind::Imp)) cands.push_back({f, false});
    for (const Formula& f : s.succ)
        if (f.is(Kind::And) || f.is(Kind::Or) || f.is(Kind::Imp)) cands.push_back({f, true});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.f != b.f) return a.f < b.f;
        return a.in_succ < b.in_succ;
    });

    std::vector<RuleInstance> out;
    for (const Cand& c : cands) {
        const Formula& f = c.f;
        Formula l = f.left(), r = f.right();
        RuleInstance ri;
        ri.principal = {f};
        if (!c.in_succ) {
            FormulaSet rest = s.ante.without(f);
            switch (f.kind()) {
                case Kind::And:
                    ri.rule = RuleName::AndLeft;
                    ri.premises = {{rest.with(l).with(r), s.succ}};
                    break;
                case Kind::Or:
                    ri.rule = RuleName::OrLeft;
                    ri.premises = {{rest.with(l), s.succ}, {rest.with(r), s.succ}};
                    break;
                default: {
                    // imp-left; the '~>' residue stays on the left in both
                    // premises, which keeps the termination measure simple.
                    FormulaSet locked = rest.with(Formula::simp(l, r));
                    ri.rule = RuleName::ImpLeft;
                    ri.premises = {{locked, s.succ.with(l)}, {locked.with(r), s.succ}};
                }
            }
        } else {
            FormulaSet rest = s.succ.without(f);
            switch (f.kind()) {
                case Kind::And:
                    ri.rule = RuleName::AndRight;
                    ri.premises = {{s.ante, rest.with(l)}, {s.ante, rest.with(r)}};
                    break;
                case Kind::Or:
                    ri.rule = RuleName::OrRight;
                    ri.premises = {{s.ante, rest.with(l).with(r)}};
                    break;
                default:
                    ri.rule = RuleName::ImpRight;
                    ri.premises = {{s.ante.with(l), rest.with(r)},
                                   {s.ante, rest.with(Formula::simp(l, r))}};
            }
        }
        out.push_back(std::move(ri));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Transitional rules

namespace {

// Shared compartment arithmetic for both transition styles.
struct TransitionParts {
    StepPartition p;
    FormulaSet imp_gamma;   // x -> y for each x ~> y in simp_gamma
    FormulaSet theta;       // t for each @t in boxed_theta
    FormulaSet imp_delta;   // aj -> bj for each aj ~> bj in simp_delta
    FormulaSet phi;         // cj for each @cj in boxed_phi
    FormulaSet base_ante;   // sigma_l + ->Gamma + Theta + @Theta
};

std::optional<TransitionParts> transition_parts(const Sequent& s) {
    if (closed_by(s) || !is_saturated(s)) return std::nullopt;
    TransitionParts t;
    t.p = step_partition(s);
    for (const Formula& g : t.p.simp_gamma) t.imp_gamma.insert(Formula::imp(g.left(), g.right()));
    for (const Formula& g : t.p.boxed_theta) t.theta.insert(g.body());
    for (const Formula& g : t.p.simp_delta) t.imp_delta.insert(Formula::imp(g.left(), g.right()));
    for (const Formula& g : t.p.boxed_phi) t.phi.insert(g.body());
    t.base_ante = t.p.sigma_l.union_with(t.imp_gamma)
                      .union_with(t.theta)
                      .union_with(t.p.boxed_theta);
    return t;
}

}  // namespace

std::optional<RuleInstance> lc_step_instance(const Sequent& s) {
    auto t = transition_parts(s);
    if (!t) return std::nullopt;
    if (t->p.simp_delta.empty() && t->p.boxed_phi.empty()) return std::nullopt;

    RuleInstance ri;
    ri.rule = RuleName::Step;
    for (const Formula& f : t->p.simp_delta) ri.principal.insert(f);
    for (const Formula& f : t->p.boxed_phi) ri.principal.insert(f);

    for (const Formula& f : t->p.simp_delta) {
        Formula a = f.left(), b = f.right();
        Sequent prem;
        prem.ante = t->base_ante.with(f).with(a);
        prem.succ = t->imp_delta.without(Formula::imp(a, b)).union_with(t->phi).with(b);
        ri.premises.push_back(std::move(prem));
    }
    for (const Formula& f : t->p.boxed_phi) {
        Sequent prem;
        prem.ante = t->base_ante.with(f);
        prem.succ = t->imp_delta.union_with(t->phi);
        ri.premises.push_back(std::move(prem));
    }
    return ri;
}

std::vector<RuleInstance> km_step_instances(const Sequent& s) {
    auto t = transition_parts(s);
    if (!t) return {};

    std::vector<RuleInstance> out;
    for (const Formula& f : t->p.simp_delta) {
        RuleInstance ri;
        ri.rule = RuleName::KmSimpRight;
        ri.principal = {f};
        ri.premises = {{t->base_ante.with(f).with(f.left()), FormulaSet{f.right()}}};
        out.push_back(std::move(ri));
    }
    for (const Formula& f : t->p.boxed_phi) {
        RuleInstance ri;
        ri.rule = RuleName::KmLaterRight;
        ri.principal = {f};
        ri.premises = {{t->base_ante.with(f), FormulaSet{f.body()}}};
        out.push_back(std::move(ri));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Derivation checking

namespace {

std::optional<std::string> fail(const std::string& path, const std::string& why) {
    return "at " + path + ": " + why;
}

std::optional<std::string> check_node(const Derivation& d, LogicId logic, const std::string& path) {
    const Sequent& s = d.conclusion;
    const std::string rule = rule_name_text(d.rule);

    switch (d.rule) {
        case RuleName::Id:
            if (!d.premises.empty()) return fail(path, "id must have no premises");
            if (d.principal.empty()) return fail(path, "id needs a witness formula");
            if (!d.principal.subset_of(s.ante) || !d.principal.subset_of(s.succ))
                return fail(path, "id witness is not on both sides");
            return std::nullopt;
        case RuleName::BotLeft:
            if (!d.premises.empty()) return fail(path, "bot-left must have no premises");
            if (d.principal != FormulaSet{Formula::bot()} || !s.ante.contains(Formula::bot()))
                return fail(path, "bot-left needs F in the antecedent");
            return std::nullopt;
        case RuleName::TopRight:
            if (!d.premises.empty()) return fail(path, "top-right must have no premises");
            if (d.principal != FormulaSet{Formula::top()} || !s.succ.contains(Formula::top()))
                return fail(path, "top-right needs T in the succedent");
            return std::nullopt;
        default: break;
    }

    // Inner node: recompute the recorded instance and match the premises.
    std::optional<RuleInstance> expected;
    switch (d.rule) {
        case RuleName::AndLeft:
        case RuleName::AndRight:
        case RuleName::OrLeft:
        case RuleName::OrRight:
        case RuleName::ImpLeft:
        case RuleName::ImpRight:
            for (RuleInstance& ri : static_rule_instances(s))
                if (ri.rule == d.rule && ri.principal == d.principal) {
                    expected = std::move(ri);
                    break;
                }
            if (!expected) return fail(path, rule + " does not apply to this sequent/principal");
            break;
        case RuleName::Step: {
            if (logic != LogicId::Lc) return fail(path, "step is not a km rule");
            expected = lc_step_instance(s);
            if (!expected) return fail(path, "step side conditions fail here");
            if (expected->principal != d.principal)
                return fail(path, "step must take every succedent eventuality as principal");
            break;
        }
        case RuleName::KmSimpRight:
        case RuleName::KmLaterRight: {
            if (logic != LogicId::Km) return fail(path, rule + " is not an lc rule");
            for (RuleInstance& ri : km_step_instances(s))
                if (ri.rule == d.rule && ri.principal == d.principal) {
                    expected = std::move(ri);
                    break;
                }
            if (!expected) return fail(path, rule + " does not apply to this sequent/principal");
            break;
        }
        default: return fail(path, "unreachable rule kind");
    }

    if (expected->premises.size() != d.premises.size())
        return fail(path, rule + " premise count mismatch");
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
        if (d.premises[i].conclusion != expected->premises[i])
            return fail(path + "." + std::to_string(i + 1),
                        "recorded sequent differs from the recomputed " + rule + " premise");
        if (auto err = check_node(d.premises[i], logic, path + "." + std::to_string(i + 1)))
            return err;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> check_derivation_error(const Derivation& d, LogicId logic) {
    return check_node(d, logic, "root");
}

bool check_derivation(const Derivation& d, LogicId logic) {
    return !check_derivation_error(d, logic);
}

}  // namespace laterproof
