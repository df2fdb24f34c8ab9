#include <algorithm>

#include <json.hpp>

#include "seforget/parser.hpp"

namespace seforget {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json atoms_json(const AtomSet& atoms) {
    ordered_json arr = ordered_json::array();
    for (const auto& a : atoms)
        arr.push_back(a.name());
    return arr;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DecodeError(std::string("malformed JSON: ") + e.what());
    }
}

void expect_keys(const json& obj, std::initializer_list<const char*> keys, const char* what) {
    if (!obj.is_object())
        throw DecodeError(std::string(what) + " must be an object");
    if (obj.size() != keys.size())
        throw DecodeError(std::string(what) + " has unexpected fields");
    for (const char* k : keys)
        if (!obj.contains(k))
            throw DecodeError(std::string(what) + " lacks field '" + k + "'");
}

AtomSet decode_atoms(const json& arr, const char* what) {
    if (!arr.is_array())
        throw DecodeError(std::string(what) + " must be an array of atoms");
    std::vector<Atom> atoms;
    for (const auto& v : arr) {
        if (!v.is_string() || !Atom::valid_name(v.get_ref<const std::string&>()))
            throw DecodeError(std::string(what) + " contains an invalid atom");
        atoms.emplace_back(v.get<std::string>());
    }
    return AtomSet(std::move(atoms));
}

} // namespace

std::string encode_json(const Program& program) {
    ordered_json rules = ordered_json::array();
    for (const auto& r : program)
        rules.push_back({{"head", atoms_json(r.head())}, {"pos", atoms_json(r.pos())}, {"neg", atoms_json(r.neg())}});
    return ordered_json{{"rules", std::move(rules)}}.dump();
}

std::string encode_json(const SEModelSet& models) {
    ordered_json arr = ordered_json::array();
    for (const auto& [x, y] : models.masks())
        arr.push_back({{"x", atoms_json(models.atoms_of(x))}, {"y", atoms_json(models.atoms_of(y))}});
    return ordered_json{{"signature", atoms_json(models.over())}, {"models", std::move(arr)}}.dump();
}

std::string encode_json(const std::vector<AtomSet>& answer_sets) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : answer_sets)
        arr.push_back(atoms_json(s));
    return ordered_json{{"answer_sets", std::move(arr)}}.dump();
}

Program decode_program_json(std::string_view text) {
    const json doc = parse_json(text);
    expect_keys(doc, {"rules"}, "program");
    if (!doc["rules"].is_array())
        throw DecodeError("'rules' must be an array");
    std::vector<Rule> rules;
    for (const auto& r : doc["rules"]) {
        expect_keys(r, {"head", "pos", "neg"}, "rule");
        auto rule = Rule::make(decode_atoms(r["head"], "head"), decode_atoms(r["pos"], "pos"),
                               decode_atoms(r["neg"], "neg"));
        if (!rule)
            throw DecodeError("rule has no literals");
        rules.push_back(std::move(*rule));
    }
    return Program(std::move(rules));
}

SEModelSet decode_models_json(std::string_view text) {
    const json doc = parse_json(text);
    expect_keys(doc, {"signature", "models"}, "model set");
    const Signature over = decode_atoms(doc["signature"], "signature");
    if (!doc["models"].is_array())
        throw DecodeError("'models' must be an array");
    std::vector<SEInterpretation> models;
    for (const auto& m : doc["models"]) {
        expect_keys(m, {"x", "y"}, "SE model");
        AtomSet x = decode_atoms(m["x"], "x"), y = decode_atoms(m["y"], "y");
        if (!x.subset_of(y) || !y.subset_of(over))
            throw DecodeError("SE model violates X ⊆ Y ⊆ signature");
        models.emplace_back(std::move(x), std::move(y), over);
    }
    return SEModelSet(over, std::move(models));
}

std::vector<AtomSet> decode_answer_sets_json(std::string_view text) {
    const json doc = parse_json(text);
    expect_keys(doc, {"answer_sets"}, "answer set collection");
    if (!doc["answer_sets"].is_array())
        throw DecodeError("'answer_sets' must be an array");
    std::vector<AtomSet> out;
    for (const auto& s : doc["answer_sets"])
        out.push_back(decode_atoms(s, "answer set"));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace seforget
