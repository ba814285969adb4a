#pragma once

#include "json.hpp"
#include "laterproof/search.hpp"

// JSON forms of the public artifacts. Formulas travel as concrete-syntax
// strings; everything else is plain objects and arrays:
//   sequent     {"ante": ["p"], "succ": ["q -> r"]}
//   derivation  {"sequent": {...}, "rule": "imp-right",
//                "principal": ["q -> r"], "premises": [derivation...]}
//   model       {"worlds": [0, 1], "rel": [[0, 1]],
//                "valuation": {"p": [1], "q": []}}
//   stats       {"sequents_visited": n, "max_branch_length": n,
//                "step_applications_max_per_branch": n, "backtracks": n}
// The *_from_json readers throw std::runtime_error with a description of the
// first malformed field.

namespace laterproof {

nlohmann::json to_json(const Sequent& s);
nlohmann::json to_json(const Derivation& d);
nlohmann::json to_json(const KripkeModel& m);
nlohmann::json to_json(const SearchStats& st);

Sequent sequent_from_json(const nlohmann::json& j);
Derivation derivation_from_json(const nlohmann::json& j);
KripkeModel model_from_json(const nlohmann::json& j);

}  // namespace laterproof
