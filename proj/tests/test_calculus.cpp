#include <random>
#include <vector>

#include "doctest.h"
#include "laterproof/calculus.hpp"
#include "testutil.hpp"

using namespace laterproof;

namespace {

Sequent seq(std::initializer_list<const char*> ante, std::initializer_list<const char*> succ) {
    Sequent s;
    for (const char* t : ante) s.ante.insert(parse(t));
    for (const char* t : succ) s.succ.insert(parse(t));
    return s;
}

Derivation node(std::initializer_list<const char*> ante, std::initializer_list<const char*> succ,
                RuleName rule, std::initializer_list<const char*> principal,
                std::vector<Derivation> prems = {}) {
    Derivation d;
    d.conclusion = seq(ante, succ);
    d.rule = rule;
    for (const char* t : principal) d.principal.insert(parse(t));
    d.premises = std::move(prems);
    return d;
}

// Closure extended with the plain implication behind each strict one; rule
// premises never leave this set, which is what keeps proof search finite.
FormulaSet ext_closure(const Sequent& s) {
    FormulaSet out = closure(s);
    for (const Formula& f : closure(s))
        if (f.is(Kind::Simp)) out.insert(Formula::imp(f.left(), f.right()));
    return out;
}

// Termination measure for the transitional rules: eventualities in the
// closure that the antecedent has not yet locked (a strict implication is
// locked once it or its plain form sits on the left; a later formula once it
// itself does).
std::size_t remaining_eventualities(const Sequent& s) {
    std::size_t n = 0;
    for (const Formula& f : closure(s)) {
        if (f.is(Kind::Simp) && !s.ante.contains(f) &&
            !s.ante.contains(Formula::imp(f.left(), f.right())))
            ++n;
        else if (f.is(Kind::Later) && !s.ante.contains(f))
            ++n;
    }
    return n;
}

std::vector<RuleInstance> transitional_instances(const Sequent& s, LogicId logic) {
    if (logic == LogicId::Lc) {
        std::vector<RuleInstance> out;
        if (auto st = lc_step_instance(s)) out.push_back(std::move(*st));
        return out;
    }
    return km_step_instances(s);
}

}  // namespace

TEST_CASE("static rule instances produce the expected premises") {
    SUBCASE("imp-right splits into a pointwise and a strict premise") {
        auto insts = static_rule_instances(seq({}, {"(@p -> p) -> p"}));
        REQUIRE(insts.size() == 1);
        CHECK(insts[0].rule == RuleName::ImpRight);
        CHECK(insts[0].principal == FormulaSet{parse("(@p -> p) -> p")});
        REQUIRE(insts[0].premises.size() == 2);
        CHECK(insts[0].premises[0] == seq({"@p -> p"}, {"p"}));
        CHECK(insts[0].premises[1] == seq({}, {"(@p -> p) ~> p"}));
    }
    SUBCASE("imp-left keeps the strict residue on the left in both premises") {
        auto insts = static_rule_instances(seq({"@p -> p"}, {"p"}));
        REQUIRE(insts.size() == 1);
        CHECK(insts[0].rule == RuleName::ImpLeft);
        REQUIRE(insts[0].premises.size() == 2);
        CHECK(insts[0].premises[0] == seq({"@p ~> p"}, {"p", "@p"}));
        CHECK(insts[0].premises[1] == seq({"@p ~> p", "p"}, {"p"}));
    }
    SUBCASE("conjunction and disjunction rules") {
        auto al = static_rule_instances(seq({"p & q"}, {"r"}));
        REQUIRE(al.size() == 1);
        CHECK(al[0].rule == RuleName::AndLeft);
        CHECK(al[0].premises == std::vector<Sequent>{seq({"p", "q"}, {"r"})});

        auto ar = static_rule_instances(seq({}, {"p & q"}));
        REQUIRE(ar.size() == 1);
        CHECK(ar[0].rule == RuleName::AndRight);
        CHECK(ar[0].premises == std::vector<Sequent>{seq({}, {"p"}), seq({}, {"q"})});

        auto ol = static_rule_instances(seq({"p | q"}, {"r"}));
        REQUIRE(ol.size() == 1);
        CHECK(ol[0].rule == RuleName::OrLeft);
        CHECK(ol[0].premises == std::vector<Sequent>{seq({"p"}, {"r"}), seq({"q"}, {"r"})});

        auto orr = static_rule_instances(seq({}, {"p | q"}));
        REQUIRE(orr.size() == 1);
        CHECK(orr[0].rule == RuleName::OrRight);
        CHECK(orr[0].premises == std::vector<Sequent>{seq({}, {"p", "q"})});
    }
    SUBCASE("instances are ordered by principal, antecedent first on ties") {
        auto insts = static_rule_instances(seq({"p -> q"}, {"p | r"}));
        REQUIRE(insts.size() == 2);
        CHECK(insts[0].rule == RuleName::ImpLeft);
        CHECK(insts[1].rule == RuleName::OrRight);

        auto tie = static_rule_instances(seq({"p & q"}, {"p & q"}));
        REQUIRE(tie.size() == 2);
        CHECK(tie[0].rule == RuleName::AndLeft);
        CHECK(tie[1].rule == RuleName::AndRight);
    }
    SUBCASE("saturated sequents admit no static instance") {
        CHECK(static_rule_instances(seq({"p", "@q", "p ~> q"}, {"r"})).empty());
    }
}

TEST_CASE("lc step instances") {
    SUBCASE("a later eventuality moves behind the modality") {
        auto st = lc_step_instance(seq({"@p ~> p"}, {"@p", "p"}));
        REQUIRE(st.has_value());
        CHECK(st->rule == RuleName::Step);
        CHECK(st->principal == FormulaSet{parse("@p")});
        REQUIRE(st->premises.size() == 1);
        CHECK(st->premises[0] == seq({"@p", "@p -> p"}, {"p"}));
    }
    SUBCASE("every succedent eventuality contributes one premise") {
        auto st = lc_step_instance(seq({}, {"p ~> q", "q ~> p"}));
        REQUIRE(st.has_value());
        CHECK(st->principal == FormulaSet{parse("p ~> q"), parse("q ~> p")});
        REQUIRE(st->premises.size() == 2);
        CHECK(st->premises[0] == seq({"p", "p ~> q"}, {"q", "q -> p"}));
        CHECK(st->premises[1] == seq({"q", "q ~> p"}, {"p", "p -> q"}));
    }
    SUBCASE("mixed strict-implication and later eventualities") {
        auto st = lc_step_instance(seq({"s"}, {"p ~> q", "@r"}));
        REQUIRE(st.has_value());
        REQUIRE(st->premises.size() == 2);
        CHECK(st->premises[0] == seq({"p", "s", "p ~> q"}, {"q", "r"}));
        CHECK(st->premises[1] == seq({"s", "@r"}, {"r", "p -> q"}));
    }
    SUBCASE("no instance without an eventuality, on closed or unsaturated sequents") {
        CHECK_FALSE(lc_step_instance(seq({"p"}, {"q"})).has_value());
        CHECK_FALSE(lc_step_instance(seq({"p ~> q"}, {"p ~> q"})).has_value());
        CHECK_FALSE(lc_step_instance(seq({"p -> q"}, {"@r"})).has_value());
    }
}

TEST_CASE("km step instances enumerate one choice per eventuality") {
    SUBCASE("strict-implication choices come before later choices") {
        auto insts = km_step_instances(seq({}, {"@q", "p ~> q"}));
        REQUIRE(insts.size() == 2);
        CHECK(insts[0].rule == RuleName::KmSimpRight);
        CHECK(insts[0].principal == FormulaSet{parse("p ~> q")});
        CHECK(insts[0].premises == std::vector<Sequent>{seq({"p", "p ~> q"}, {"q"})});
        CHECK(insts[1].rule == RuleName::KmLaterRight);
        CHECK(insts[1].principal == FormulaSet{parse("@q")});
        CHECK(insts[1].premises == std::vector<Sequent>{seq({"@q"}, {"q"})});
    }
    SUBCASE("each choice keeps only its own goal on the right") {
        auto insts = km_step_instances(seq({"@s"}, {"p ~> q", "q ~> p"}));
        REQUIRE(insts.size() == 2);
        CHECK(insts[0].premises == std::vector<Sequent>{seq({"p", "s", "@s", "p ~> q"}, {"q"})});
        CHECK(insts[1].premises == std::vector<Sequent>{seq({"q", "s", "@s", "q ~> p"}, {"p"})});
    }
    CHECK(km_step_instances(seq({"p"}, {"q"})).empty());
    CHECK(km_step_instances(seq({"p -> q"}, {"@r"})).empty());
}

TEST_CASE("a hand-built lc derivation of the strong Löb axiom checks out") {
    Derivation left =
        node({"@p -> p"}, {"p"}, RuleName::ImpLeft, {"@p -> p"},
             {node({"@p ~> p"}, {"p", "@p"}, RuleName::Step, {"@p"},
                   {node({"@p", "@p -> p"}, {"p"}, RuleName::ImpLeft, {"@p -> p"},
                         {node({"@p", "@p ~> p"}, {"p", "@p"}, RuleName::Id, {"@p"}),
                          node({"@p", "@p ~> p", "p"}, {"p"}, RuleName::Id, {"p"})})}),
              node({"@p ~> p", "p"}, {"p"}, RuleName::Id, {"p"})});
    Derivation right = node(
        {}, {"(@p -> p) ~> p"}, RuleName::Step, {"(@p -> p) ~> p"},
        {node({"@p -> p", "(@p -> p) ~> p"}, {"p"}, RuleName::ImpLeft, {"@p -> p"},
              {node({"@p ~> p", "(@p -> p) ~> p"}, {"p", "@p"}, RuleName::Step, {"@p"},
                    {node({"@p", "@p -> p", "(@p -> p) -> p"}, {"p"}, RuleName::ImpLeft,
                          {"@p -> p"},
                          {node({"@p", "@p ~> p", "(@p -> p) -> p"}, {"p", "@p"}, RuleName::Id,
                                {"@p"}),
                           node({"@p", "@p ~> p", "(@p -> p) -> p", "p"}, {"p"}, RuleName::Id,
                                {"p"})})}),
               node({"@p ~> p", "(@p -> p) ~> p", "p"}, {"p"}, RuleName::Id, {"p"})})});
    Derivation root = node({}, {"(@p -> p) -> p"}, RuleName::ImpRight, {"(@p -> p) -> p"},
                           {left, right});

    CHECK(check_derivation(root, LogicId::Lc));
    CHECK_FALSE(check_derivation_error(root, LogicId::Lc).has_value());

    SUBCASE("the same tree is rejected under the branching logic") {
        auto err = check_derivation_error(root, LogicId::Km);
        REQUIRE(err.has_value());
        CHECK(err->find("root.1.1") != std::string::npos);
        CHECK(err->find("step") != std::string::npos);
    }
    SUBCASE("a wrong identity witness is reported with its path") {
        Derivation bad = root;
        bad.premises[0].premises[1].principal = FormulaSet{parse("q")};
        auto err = check_derivation_error(bad, LogicId::Lc);
        REQUIRE(err.has_value());
        CHECK(err->find("root.1.2") != std::string::npos);
        CHECK(err->find("witness") != std::string::npos);
    }
    SUBCASE("a tampered premise sequent is reported with its path") {
        Derivation bad = root;
        bad.premises[1].premises[0].conclusion.ante.erase(parse("@p -> p"));
        auto err = check_derivation_error(bad, LogicId::Lc);
        REQUIRE(err.has_value());
        CHECK(err->find("root.2.1") != std::string::npos);
        CHECK(err->find("differs") != std::string::npos);
    }
    SUBCASE("an inapplicable closing rule is rejected") {
        Derivation bad = root;
        bad.premises[0].premises[1].rule = RuleName::BotLeft;
        bad.premises[0].premises[1].principal = FormulaSet{Formula::bot()};
        auto err = check_derivation_error(bad, LogicId::Lc);
        REQUIRE(err.has_value());
        CHECK(err->find("root.1.2") != std::string::npos);
        CHECK(err->find("bot-left") != std::string::npos);
    }
    SUBCASE("the step rule must take every succedent eventuality") {
        Derivation partial = node({}, {"p ~> q", "q ~> p"}, RuleName::Step, {"p ~> q"},
                                  {node({"p", "p ~> q"}, {"q", "q -> p"}, RuleName::Id, {"q"})});
        auto err = check_derivation_error(partial, LogicId::Lc);
        REQUIRE(err.has_value());
        CHECK(err->find("every succedent eventuality") != std::string::npos);
    }
}

TEST_CASE("a hand-built km derivation using the later rule checks out") {
    Derivation root =
        node({"@p ~> p"}, {"p", "@p"}, RuleName::KmLaterRight, {"@p"},
             {node({"@p", "@p -> p"}, {"p"}, RuleName::ImpLeft, {"@p -> p"},
                   {node({"@p", "@p ~> p"}, {"p", "@p"}, RuleName::Id, {"@p"}),
                    node({"@p", "@p ~> p", "p"}, {"p"}, RuleName::Id, {"p"})})});
    CHECK(check_derivation(root, LogicId::Km));
    auto err = check_derivation_error(root, LogicId::Lc);
    REQUIRE(err.has_value());
    CHECK(err->find("km-later-right") != std::string::npos);
}

TEST_CASE("a hand-built km derivation of the branching axiom checks out") {
    // @q -> (p | (p -> q)) is the extra axiom the branching logic adds on top
    // of the linear-free fragment.
    Derivation left = node(
        {"@q"}, {"p | (p -> q)"}, RuleName::OrRight, {"p | (p -> q)"},
        {node({"@q"}, {"p", "p -> q"}, RuleName::ImpRight, {"p -> q"},
              {node({"p", "@q"}, {"p", "q"}, RuleName::Id, {"p"}),
               node({"@q"}, {"p", "p ~> q"}, RuleName::KmSimpRight, {"p ~> q"},
                    {node({"p", "q", "@q", "p ~> q"}, {"q"}, RuleName::Id, {"q"})})})});
    Derivation right = node(
        {}, {"@q ~> (p | (p -> q))"}, RuleName::KmSimpRight, {"@q ~> (p | (p -> q))"},
        {node({"@q", "@q ~> (p | (p -> q))"}, {"p | (p -> q)"}, RuleName::OrRight,
              {"p | (p -> q)"},
              {node({"@q", "@q ~> (p | (p -> q))"}, {"p", "p -> q"}, RuleName::ImpRight,
                    {"p -> q"},
                    {node({"p", "@q", "@q ~> (p | (p -> q))"}, {"p", "q"}, RuleName::Id, {"p"}),
                     node({"@q", "@q ~> (p | (p -> q))"}, {"p", "p ~> q"}, RuleName::KmSimpRight,
                          {"p ~> q"},
                          {node({"p", "q", "@q", "p ~> q", "@q -> (p | (p -> q))"}, {"q"},
                                RuleName::Id, {"q"})})})})});
    Derivation root = node({}, {"@q -> (p | (p -> q))"}, RuleName::ImpRight,
                           {"@q -> (p | (p -> q))"}, {left, right});
    CHECK(check_derivation(root, LogicId::Km));
}

TEST_CASE("rule premises stay inside the extended closure of the conclusion") {
    std::mt19937 rng(515);
    int with_instances = 0;
    for (int i = 0; i < 400; ++i) {
        Sequent s = testutil::random_sequent(rng, {"p", "q"}, 3, 6);
        FormulaSet cl = ext_closure(s);
        std::vector<RuleInstance> insts = static_rule_instances(s);
        for (LogicId logic : {LogicId::Lc, LogicId::Km})
            for (RuleInstance& ri : transitional_instances(s, logic)) insts.push_back(ri);
        if (!insts.empty()) ++with_instances;
        for (const RuleInstance& ri : insts)
            for (const Sequent& prem : ri.premises) {
                CHECK(prem.ante.subset_of(cl));
                CHECK(prem.succ.subset_of(cl));
                // and the premise's own extended closure cannot grow either
                CHECK(ext_closure(prem).subset_of(cl));
            }
    }
    CHECK(with_instances > 200);
}

TEST_CASE("the eventuality measure shrinks strictly across transitions") {
    std::mt19937 rng(616);
    int transitional_seen = 0;
    for (int i = 0; i < 3000 && transitional_seen < 150; ++i) {
        Sequent s = testutil::random_sequent(rng, {"p", "q"}, 2, 5);
        std::size_t before = remaining_eventualities(s);
        for (const RuleInstance& ri : static_rule_instances(s))
            for (const Sequent& prem : ri.premises)
                CHECK(remaining_eventualities(prem) <= before);
        for (LogicId logic : {LogicId::Lc, LogicId::Km})
            for (const RuleInstance& ri : transitional_instances(s, logic))
                for (const Sequent& prem : ri.premises) {
                    ++transitional_seen;
                    CHECK(remaining_eventualities(prem) < before);
                }
    }
    CHECK(transitional_seen >= 150);
}

TEST_CASE("static saturation terminates within the sequent's total length") {
    std::mt19937 rng(717);
    for (int i = 0; i < 100; ++i) {
        Sequent root = testutil::random_sequent(rng, {"p", "q"}, 2, 5);
        int bound = total_length(root);
        std::vector<std::pair<Sequent, int>> work{{root, 0}};
        while (!work.empty()) {
            auto [s, depth] = std::move(work.back());
            work.pop_back();
            auto insts = static_rule_instances(s);
            if (insts.empty()) {
                CHECK(is_saturated(s));
                continue;
            }
            REQUIRE(depth < bound);
            for (const Sequent& prem : insts.front().premises) work.push_back({prem, depth + 1});
        }
    }
}

TEST_CASE("static rules are locally sound and invertible on branching models") {
    std::mt19937 rng(818);
    int checks = 0;
    for (int i = 0; i < 120; ++i) {
        KripkeModel m = testutil::random_km_model(rng, 4, {"p", "q"});
        Sequent s = testutil::random_sequent(rng, {"p", "q"}, 2, 5);
        for (const RuleInstance& ri : static_rule_instances(s))
            for (int w : m.worlds) {
                bool conclusion_refuted = testutil::refuted_at(m, s, w);
                bool some_premise_refuted = false;
                for (const Sequent& prem : ri.premises)
                    some_premise_refuted |= testutil::refuted_at(m, prem, w);
                CHECK(conclusion_refuted == some_premise_refuted);
                ++checks;
            }
    }
    CHECK(checks > 400);
}

TEST_CASE("the lc step rule is sound over linear models") {
    std::mt19937 rng(919);
    int refuted_conclusions = 0;
    for (int i = 0; i < 4000 && refuted_conclusions < 60; ++i) {
        Sequent s = testutil::random_sequent(rng, {"p", "q"}, 2, 4);
        auto st = lc_step_instance(s);
        if (!st) continue;
        KripkeModel m = testutil::random_chain_model(rng, 4, {"p", "q"});
        if (!testutil::refuting_world(m, s)) continue;
        ++refuted_conclusions;
        bool some_premise_refuted = false;
        for (const Sequent& prem : st->premises)
            some_premise_refuted |= testutil::refuting_world(m, prem).has_value();
        CHECK(some_premise_refuted);
    }
    CHECK(refuted_conclusions >= 60);
}

TEST_CASE("every km choice preserves a refutation somewhere in the model") {
    std::mt19937 rng(1020);
    int refuted_conclusions = 0;
    for (int i = 0; i < 4000 && refuted_conclusions < 60; ++i) {
        Sequent s = testutil::random_sequent(rng, {"p", "q"}, 2, 4);
        auto insts = km_step_instances(s);
        if (insts.empty()) continue;
        KripkeModel m = testutil::random_km_model(rng, 4, {"p", "q"});
        if (!testutil::refuting_world(m, s)) continue;
        ++refuted_conclusions;
        for (const RuleInstance& ri : insts)
            for (const Sequent& prem : ri.premises)
                CHECK(testutil::refuting_world(m, prem).has_value());
    }
    CHECK(refuted_conclusions >= 60);
}
