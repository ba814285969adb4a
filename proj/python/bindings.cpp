// Python module exposing the main operations: parsing, proof search,
// derivation checking, model checking, the validity oracle, and stage values.
// Structured results (derivations, models, statistics) cross the boundary as
// plain dicts/lists mirroring the library's JSON forms.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "laterproof/json_io.hpp"
#include "laterproof/search.hpp"

namespace py = pybind11;
using namespace laterproof;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const json& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

json py_to_json(const py::handle& o) {
    if (o.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(o)) return o.cast<bool>();
    if (py::isinstance<py::int_>(o)) return o.cast<long long>();
    if (py::isinstance<py::float_>(o)) return o.cast<double>();
    if (py::isinstance<py::str>(o)) return o.cast<std::string>();
    if (py::isinstance<py::dict>(o)) {
        json out = json::object();
        for (auto item : py::reinterpret_borrow<py::dict>(o))
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(o) || py::isinstance<py::tuple>(o)) {
        json out = json::array();
        for (auto item : py::reinterpret_borrow<py::sequence>(o)) out.push_back(py_to_json(item));
        return out;
    }
    throw py::value_error("value cannot be represented as JSON");
}

LogicId logic_arg(const std::string& s) {
    auto l = logic_from_text(s);
    if (!l) throw py::value_error("logic must be 'lc' or 'km', got '" + s + "'");
    return *l;
}

py::object outcome_to_py(const Formula& goal, LogicId logic, const SearchOutcome& out) {
    json jr;
    jr["goal"] = goal.text();
    jr["logic"] = logic_text(logic);
    jr["provable"] = out.provable;
    if (out.derivation) jr["derivation"] = to_json(*out.derivation);
    if (out.model) {
        jr["model"] = to_json(*out.model);
        jr["refuting_world"] = out.refuting_world;
    }
    jr["stats"] = to_json(out.stats);
    return json_to_py(jr);
}

}  // namespace

PYBIND11_MODULE(_laterproof, m) {
    m.doc() = "Decision procedure and countermodel generator for intuitionistic modal "
              "logics with the 'later' modality";
    m.attr("__version__") = "1.0.0";

    py::class_<Formula>(m, "Formula")
        .def_property_readonly("text", [](const Formula& f) { return f.text(); })
        .def_property_readonly("length", &Formula::length)
        .def("__str__", [](const Formula& f) { return f.text(); })
        .def("__repr__", [](const Formula& f) { return "Formula('" + f.text() + "')"; })
        .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; },
             py::is_operator())
        .def("__hash__", [](const Formula& f) { return py::hash(py::str(f.text())); });

    m.def("parse", &parse, py::arg("text"),
          "Parse a formula; raises RuntimeError with position details on bad input.");

    m.def(
        "prove",
        [](const std::string& goal, const std::string& logic) {
            Formula f = parse(goal);
            LogicId l = logic_arg(logic);
            return outcome_to_py(f, l, prove_formula(f, l));
        },
        py::arg("goal"), py::arg("logic") = "lc",
        "Decide the goal formula. Returns a dict with 'provable' plus either a "
        "checkable 'derivation' or a 'model' with its 'refuting_world'.");

    m.def(
        "prove_sequent",
        [](const std::vector<std::string>& ante, const std::vector<std::string>& succ,
           const std::string& logic) {
            Sequent s;
            for (const std::string& t : ante) s.ante.insert(parse(t));
            for (const std::string& t : succ) s.succ.insert(parse(t));
            LogicId l = logic_arg(logic);
            SearchOutcome out = prove(s, l);
            json jr;
            jr["goal"] = to_json(s);
            jr["logic"] = logic_text(l);
            jr["provable"] = out.provable;
            if (out.derivation) jr["derivation"] = to_json(*out.derivation);
            if (out.model) {
                jr["model"] = to_json(*out.model);
                jr["refuting_world"] = out.refuting_world;
            }
            jr["stats"] = to_json(out.stats);
            return json_to_py(jr);
        },
        py::arg("ante"), py::arg("succ"), py::arg("logic") = "lc",
        "Decide a sequent given as two lists of formula strings.");

    m.def(
        "check_derivation",
        [](const py::dict& d, const std::string& logic) {
            return check_derivation(derivation_from_json(py_to_json(d)), logic_arg(logic));
        },
        py::arg("derivation"), py::arg("logic") = "lc",
        "Check an alleged derivation bottom-up against the calculus rules.");

    m.def(
        "check_derivation_error",
        [](const py::dict& d, const std::string& logic) -> py::object {
            auto err = check_derivation_error(derivation_from_json(py_to_json(d)),
                                              logic_arg(logic));
            return err ? py::object(py::str(*err)) : py::object(py::none());
        },
        py::arg("derivation"), py::arg("logic") = "lc",
        "Like check_derivation but returns the first defect (or None).");

    m.def(
        "frame_check",
        [](const py::dict& model, const std::string& logic) {
            return frame_check(model_from_json(py_to_json(model)), logic_arg(logic));
        },
        py::arg("model"), py::arg("logic") = "lc",
        "List of frame/valuation defects; empty means the model is legal.");

    m.def(
        "forces",
        [](const py::dict& model, int world, const std::string& formula) {
            return forces(model_from_json(py_to_json(model)), world, parse(formula));
        },
        py::arg("model"), py::arg("world"), py::arg("formula"),
        "Forcing at a world of a model given in JSON form.");

    m.def(
        "lc_valid",
        [](const std::string& formula) { return lc_validity_oracle(parse(formula)); },
        py::arg("formula"),
        "Brute-force validity over linear frames (honors LATERPROOF_BUDGET).");

    m.def(
        "trees_value",
        [](const std::string& formula, const py::dict& assignment) -> py::object {
            TreesAssignment a;
            for (auto item : assignment) {
                std::string name = item.first.cast<std::string>();
                if (item.second.is_none())
                    a.emplace(name, ExtNat::inf());
                else
                    a.emplace(name, ExtNat::of(item.second.cast<std::uint64_t>()));
            }
            ExtNat v = trees_value(a, parse(formula));
            return v.is_inf() ? py::object(py::none()) : py::object(py::int_(v.finite()));
        },
        py::arg("formula"), py::arg("assignment"),
        "Stage-semantics truth value; atoms map to a stage count or None for 'always'.");
}
