#include "laterproof/sequent.hpp"

#include <array>

namespace laterproof {

namespace {

const std::array<std::string, 12> kRuleNames = {
    "id",        "bot-left", "top-right",    "and-left",      "and-right", "or-left",
    "or-right",  "imp-left", "imp-right",    "step",          "km-simp-right",
    "km-later-right"};

bool is_static_kind(Kind k) { return k == Kind::And || k == Kind::Or || k == Kind::Imp; }

}  // namespace

const std::string& rule_name_text(RuleName r) { return kRuleNames[static_cast<int>(r)]; }

std::optional<RuleName> rule_name_from_text(const std::string& s) {
    for (std::size_t i = 0; i < kRuleNames.size(); ++i)
        if (kRuleNames[i] == s) return static_cast<RuleName>(i);
    return std::nullopt;
}

std::string Sequent::text() const {
    std::string out = ante.text();
    if (!ante.empty()) out += " ";
    out += "=>";
    if (!succ.empty()) out += " " + succ.text();
    return out;
}

int total_length(const Sequent& s) {
    int n = 0;
    for (const Formula& f : s.ante) n += f.length();
    for (const Formula& f : s.succ) n += f.length();
    return n;
}

std::set<std::string> atom_names(const Sequent& s) {
    std::set<std::string> out;
    for (const Formula& f : s.ante)
        for (const std::string& a : atom_names(f)) out.insert(a);
    for (const Formula& f : s.succ)
        for (const std::string& a : atom_names(f)) out.insert(a);
    return out;
}

FormulaSet closure(const Sequent& s) {
    FormulaSet out;
    for (const Formula& f : s.ante) out = out.union_with(closure(f));
    for (const Formula& f : s.succ) out = out.union_with(closure(f));
    return out;
}

std::optional<RuleName> closed_by(const Sequent& s) {
    if (s.ante.intersects(s.succ)) return RuleName::Id;
    if (s.ante.contains(Formula::bot())) return RuleName::BotLeft;
    if (s.succ.contains(Formula::top())) return RuleName::TopRight;
    return std::nullopt;
}

bool is_saturated(const Sequent& s) {
    for (const Formula& f : s.ante)
        if (is_static_kind(f.kind())) return false;
    for (const Formula& f : s.succ)
        if (is_static_kind(f.kind())) return false;
    return true;
}

FormulaSet eventualities(const Sequent& s) {
    FormulaSet out;
    for (const Formula& f : s.succ)
        if ((f.is(Kind::Simp) || f.is(Kind::Later)) && !s.ante.contains(f)) out.insert(f);
    return out;
}

NotSaturated::NotSaturated(const Sequent& s)
    : std::logic_error("sequent is not saturated: " + s.text()) {}

StepPartition step_partition(const Sequent& s) {
    if (!is_saturated(s)) throw NotSaturated(s);
    StepPartition p;
    for (const Formula& f : s.ante) {
        if (f.is(Kind::Later))
            p.boxed_theta.insert(f);
        else if (f.is(Kind::Simp))
            p.simp_gamma.insert(f);
        else
            p.sigma_l.insert(f);
    }
    for (const Formula& f : s.succ) {
        if (f.is(Kind::Simp))
            p.simp_delta.push_back(f);
        else if (f.is(Kind::Later))
            p.boxed_phi.push_back(f);
        else
            p.sigma_r.insert(f);
    }
    return p;
}

}  // namespace laterproof
