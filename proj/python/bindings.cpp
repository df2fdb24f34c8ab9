#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "seforget/errors.hpp"
#include "seforget/forgetting.hpp"
#include "seforget/parser.hpp"
#include "seforget/semantics.hpp"

namespace py = pybind11;
using namespace seforget;

namespace {

AtomSet atoms_from(const std::vector<std::string>& names) {
    std::vector<Atom> atoms;
    atoms.reserve(names.size());
    for (const auto& n : names)
        atoms.emplace_back(n);
    return AtomSet(std::move(atoms));
}

std::vector<std::string> names_of(const AtomSet& atoms) {
    std::vector<std::string> out;
    for (const auto& a : atoms)
        out.push_back(a.name());
    return out;
}

std::optional<Signature> signature_from(const std::optional<std::vector<std::string>>& names) {
    if (!names)
        return std::nullopt;
    return atoms_from(*names);
}

Step1Mode mode_from(const std::string& mode) {
    if (mode == "sound")
        return Step1Mode::sound;
    if (mode == "paper-literal")
        return Step1Mode::paper_literal;
    throw py::value_error("mode must be 'sound' or 'paper-literal'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Forgetting in disjunctive logic programs under SE semantics.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<SyntaxError>(m, "SyntaxError", error);
    py::register_exception<InvalidAtom>(m, "InvalidAtom", error);
    py::register_exception<EmptyRule>(m, "EmptyRule", error);
    py::register_exception<DecodeError>(m, "DecodeError", error);
    py::register_exception<SignatureMismatch>(m, "SignatureMismatch", error);
    py::register_exception<SignatureTooLarge>(m, "SignatureTooLarge", error);

    py::class_<Rule>(m, "Rule")
        .def(py::init([](const std::vector<std::string>& head, const std::vector<std::string>& pos,
                         const std::vector<std::string>& neg) {
                 return Rule(atoms_from(head), atoms_from(pos), atoms_from(neg));
             }),
             py::arg("head") = std::vector<std::string>{}, py::arg("pos") = std::vector<std::string>{},
             py::arg("neg") = std::vector<std::string>{})
        .def_static("parse", &parse_rule, py::arg("text"))
        .def_property_readonly("head", [](const Rule& r) { return names_of(r.head()); })
        .def_property_readonly("pos", [](const Rule& r) { return names_of(r.pos()); })
        .def_property_readonly("neg", [](const Rule& r) { return names_of(r.neg()); })
        .def("__str__", &format_rule)
        .def("__repr__", [](const Rule& r) { return "Rule(" + format_rule(r) + ")"; })
        .def("__eq__", [](const Rule& a, const Rule& b) { return a == b; })
        .def("__lt__", [](const Rule& a, const Rule& b) { return a < b; })
        .def("__hash__", [](const Rule& r) { return py::hash(py::str(format_rule(r))); });

    py::class_<Program>(m, "Program")
        .def(py::init<>())
        .def(py::init([](const std::vector<Rule>& rules) { return Program(rules); }), py::arg("rules"))
        .def_static("parse", &parse_program, py::arg("text"))
        .def_static("from_json", &decode_program_json, py::arg("text"))
        .def("to_json", [](const Program& p) { return encode_json(p); })
        .def_property_readonly("rules", &Program::rules)
        .def("signature", [](const Program& p) { return names_of(program_signature(p)); })
        .def("__len__", &Program::size)
        .def("__iter__", [](const Program& p) { return py::make_iterator(p.begin(), p.end()); },
             py::keep_alive<0, 1>())
        .def("__contains__", &Program::contains)
        .def("__str__", &format_program)
        .def("__repr__", [](const Program& p) { return "Program(" + std::to_string(p.size()) + " rules)"; })
        .def("__eq__", [](const Program& a, const Program& b) { return a == b; });

    m.def(
        "forget",
        [](const Program& program, const std::vector<std::string>& atoms, const std::string& mode, bool minimize,
           bool saturate, bool keep_local) {
            ForgetOptions opts;
            opts.step1_mode = mode_from(mode);
            opts.minimize_output = minimize;
            opts.saturate = saturate;
            opts.keep_local_rules = keep_local;
            py::gil_scoped_release release;
            return forget_set(program, atoms_from(atoms), opts);
        },
        py::arg("program"), py::arg("atoms"), py::kw_only(), py::arg("mode") = "sound", py::arg("minimize") = true,
        py::arg("saturate") = true, py::arg("keep_local") = false,
        "Forget `atoms` from `program`; the result mentions none of them.");

    m.def(
        "answer_sets", [](const Program& p) {
            std::vector<std::vector<std::string>> out;
            for (const auto& s : answer_sets(p))
                out.push_back(names_of(s));
            return out;
        },
        py::arg("program"));

    m.def(
        "se_models",
        [](const Program& p, const std::optional<std::vector<std::string>>& signature) {
            const Signature sig = signature ? atoms_from(*signature) : program_signature(p);
            std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
            for (const auto& w : se_models(p, sig).models())
                out.emplace_back(names_of(w.x), names_of(w.y));
            return out;
        },
        py::arg("program"), py::arg("signature") = std::nullopt,
        "SE models as (X, Y) pairs of sorted atom lists.");

    m.def(
        "strongly_equivalent",
        [](const Program& p, const Program& q, const std::optional<std::vector<std::string>>& signature) {
            return strongly_equivalent(p, q, signature_from(signature));
        },
        py::arg("p"), py::arg("q"), py::arg("signature") = std::nullopt);

    m.def(
        "se_entails",
        [](const Program& p, const Rule& r, const std::optional<std::vector<std::string>>& signature) {
            return se_entails(p, r, signature_from(signature));
        },
        py::arg("program"), py::arg("rule"), py::arg("signature") = std::nullopt);

    m.def(
        "forget_clauses",
        [](const std::string& text, const std::string& atom) {
            return format_clauses(forget_pc(parse_clauses(text), Atom(atom)));
        },
        py::arg("text"), py::arg("atom"), "Forget one atom from propositional clauses given as text.");
}
