#pragma once

// Concrete syntax.
//
//   program  := rule*
//   rule     := head "." | head ":-" body "." | ":-" body "."
//   head     := atom (";" atom)*
//   body     := literal ("," literal)*
//   literal  := atom | "not" atom
//   atom     := [a-z][A-Za-z0-9_]*
//
// Whitespace is insignificant and `%` starts a comment running to the end of
// the line. `not` is reserved.
//
// Clause files hold one clause per line, literals separated by `|`, negative
// literals prefixed by `-`; `[]` is the empty clause.

#include <string>
#include <string_view>
#include <vector>

#include "seforget/clause.hpp"
#include "seforget/core.hpp"
#include "seforget/semantics.hpp"

namespace seforget {

Program parse_program(std::string_view text);
/// Exactly one rule, e.g. the argument of `entails --rule`.
Rule parse_rule(std::string_view text);
ClauseSet parse_clauses(std::string_view text);

std::string format_rule(const Rule& rule);
/// One rule per line, canonical order, no trailing newline.
std::string format_program(const Program& program);
std::string format_clause(const Clause& clause);
std::string format_clauses(const ClauseSet& clauses);

std::string format_atom_set(const AtomSet& atoms); ///< `{a,c}`
/// `(∅,{p}) ({p},{p})`
std::string format_models(const SEModelSet& models);
/// `{a,c} {a,d}`
std::string format_answer_sets(const std::vector<AtomSet>& answer_sets);

// JSON: {"rules":[{"head":[..],"pos":[..],"neg":[..]}]},
// {"signature":[..],"models":[{"x":[..],"y":[..]}]} and {"answer_sets":[[..]]}.
std::string encode_json(const Program& program);
std::string encode_json(const SEModelSet& models);
std::string encode_json(const std::vector<AtomSet>& answer_sets);

Program decode_program_json(std::string_view text);
SEModelSet decode_models_json(std::string_view text);
std::vector<AtomSet> decode_answer_sets_json(std::string_view text);

} // namespace seforget
