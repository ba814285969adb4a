#include "laterproof/json_io.hpp"

namespace laterproof {

using nlohmann::json;

namespace {

json formulas_to_json(const FormulaSet& fs) {
    json out = json::array();
    for (const Formula& f : fs) out.push_back(f.text());
    return out;
}

[[noreturn]] void malformed(const std::string& what) {
    throw std::runtime_error("malformed JSON: " + what);
}

const json& field(const json& j, const char* key, const char* owner) {
    if (!j.is_object()) malformed(std::string(owner) + " must be an object");
    auto it = j.find(key);
    if (it == j.end()) malformed(std::string(owner) + " is missing '" + key + "'");
    return *it;
}

FormulaSet formulas_from_json(const json& j, const char* owner) {
    if (!j.is_array()) malformed(std::string(owner) + " must be an array of formula strings");
    FormulaSet out;
    for (const json& e : j) {
        if (!e.is_string()) malformed(std::string(owner) + " must contain only strings");
        try {
            out.insert(parse(e.get<std::string>()));
        } catch (const ParseError& pe) {
            malformed(std::string(owner) + " entry '" + e.get<std::string>() + "': " + pe.what());
        }
    }
    return out;
}

int int_from_json(const json& j, const char* owner) {
    if (!j.is_number_integer()) malformed(std::string(owner) + " must be an integer");
    return j.get<int>();
}

}  // namespace

json to_json(const Sequent& s) {
    return {{"ante", formulas_to_json(s.ante)}, {"succ", formulas_to_json(s.succ)}};
}

json to_json(const Derivation& d) {
    json prems = json::array();
    for (const Derivation& p : d.premises) prems.push_back(to_json(p));
    return {{"sequent", to_json(d.conclusion)},
            {"rule", rule_name_text(d.rule)},
            {"principal", formulas_to_json(d.principal)},
            {"premises", std::move(prems)}};
}

json to_json(const KripkeModel& m) {
    json rel = json::array();
    for (const auto& [a, b] : m.rel) rel.push_back(json::array({a, b}));
    json val = json::object();
    for (const auto& [atom, ext] : m.valuation) {
        json row = json::array();
        for (int w : ext) row.push_back(w);
        val[atom] = std::move(row);
    }
    json worlds = json::array();
    for (int w : m.worlds) worlds.push_back(w);
    return {{"worlds", std::move(worlds)}, {"rel", std::move(rel)}, {"valuation", std::move(val)}};
}

json to_json(const SearchStats& st) {
    return {{"sequents_visited", st.sequents_visited},
            {"max_branch_length", st.max_branch_length},
            {"step_applications_max_per_branch", st.step_applications_max_per_branch},
            {"backtracks", st.backtracks}};
}

Sequent sequent_from_json(const json& j) {
    return {formulas_from_json(field(j, "ante", "sequent"), "sequent.ante"),
            formulas_from_json(field(j, "succ", "sequent"), "sequent.succ")};
}

Derivation derivation_from_json(const json& j) {
    Derivation d;
    d.conclusion = sequent_from_json(field(j, "sequent", "derivation"));
    const json& rule = field(j, "rule", "derivation");
    if (!rule.is_string()) malformed("derivation.rule must be a string");
    auto rn = rule_name_from_text(rule.get<std::string>());
    if (!rn) malformed("unknown rule name '" + rule.get<std::string>() + "'");
    d.rule = *rn;
    d.principal = formulas_from_json(field(j, "principal", "derivation"), "derivation.principal");
    const json& prems = field(j, "premises", "derivation");
    if (!prems.is_array()) malformed("derivation.premises must be an array");
    for (const json& p : prems) d.premises.push_back(derivation_from_json(p));
    return d;
}

KripkeModel model_from_json(const json& j) {
    KripkeModel m;
    const json& worlds = field(j, "worlds", "model");
    if (!worlds.is_array()) malformed("model.worlds must be an array of integers");
    for (const json& w : worlds) m.worlds.insert(int_from_json(w, "model.worlds entry"));

    const json& rel = field(j, "rel", "model");
    if (!rel.is_array()) malformed("model.rel must be an array of pairs");
    for (const json& e : rel) {
        if (!e.is_array() || e.size() != 2) malformed("model.rel entries must be pairs");
        m.rel.insert({int_from_json(e[0], "model.rel"), int_from_json(e[1], "model.rel")});
    }

    const json& val = field(j, "valuation", "model");
    if (!val.is_object()) malformed("model.valuation must be an object");
    for (auto it = val.begin(); it != val.end(); ++it) {
        if (!is_valid_atom_name(it.key())) malformed("invalid atom name '" + it.key() + "'");
        if (!it.value().is_array()) malformed("model.valuation rows must be arrays");
        auto& row = m.valuation[it.key()];
        for (const json& w : it.value()) row.insert(int_from_json(w, "model.valuation entry"));
    }
    return m;
}

}  // namespace laterproof
