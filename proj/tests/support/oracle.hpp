#pragma once

// Test-only reference implementations. Everything here works on plain
// std::set<std::string> values straight from the definitions and shares no
// code with the library's mask-based enumeration or its resolution engine.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "seforget/clause.hpp"
#include "seforget/core.hpp"
#include "seforget/semantics.hpp"

namespace oracle {

using Names = std::set<std::string>;
using Pair = std::pair<Names, Names>; // (X, Y)
using Models = std::set<Pair>;

struct NaiveRule {
    Names head, pos, neg;
};

inline Names names(const seforget::AtomSet& s) {
    Names out;
    for (const auto& a : s)
        out.insert(a.name());
    return out;
}

inline NaiveRule naive(const seforget::Rule& r) { return {names(r.head()), names(r.pos()), names(r.neg())}; }

inline std::vector<NaiveRule> naive(const seforget::Program& p) {
    std::vector<NaiveRule> out;
    for (const auto& r : p)
        out.push_back(naive(r));
    return out;
}

inline bool subset(const Names& a, const Names& b) {
    for (const auto& x : a)
        if (!b.count(x))
            return false;
    return true;
}

inline bool meets(const Names& a, const Names& b) {
    for (const auto& x : a)
        if (b.count(x))
            return true;
    return false;
}

/// Y ⊨ r and X ⊨ r^Y.
inline bool satisfies(const Names& x, const Names& y, const NaiveRule& r) {
    const bool there_body = subset(r.pos, y) && !meets(r.neg, y);
    if (there_body && !meets(r.head, y))
        return false;
    const bool in_reduct = !meets(r.neg, y);
    if (in_reduct && subset(r.pos, x) && !meets(r.head, x))
        return false;
    return true;
}

inline std::vector<Names> subsets(const std::vector<std::string>& atoms) {
    std::vector<Names> out;
    const std::size_t n = atoms.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        Names s;
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1)
                s.insert(atoms[i]);
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<std::string> to_vec(const Names& s) { return {s.begin(), s.end()}; }

inline Models se_models(const std::vector<NaiveRule>& program, const Names& sig) {
    Models out;
    for (const auto& y : subsets(to_vec(sig)))
        for (const auto& x : subsets(to_vec(y))) {
            bool ok = true;
            for (const auto& r : program)
                if (!satisfies(x, y, r)) {
                    ok = false;
                    break;
                }
            if (ok)
                out.insert({x, y});
        }
    return out;
}

inline Names intersect(const Names& a, const Names& b) {
    Names out;
    for (const auto& x : a)
        if (b.count(x))
            out.insert(x);
    return out;
}

inline Models project(const Models& models, const Names& sub) {
    Models out;
    for (const auto& [x, y] : models)
        out.insert({intersect(x, sub), intersect(y, sub)});
    return out;
}

/// Every non-empty rule over `sig` (each atom: absent, head, positive or negative body).
inline std::vector<NaiveRule> all_rules(const Names& sig) {
    const auto atoms = to_vec(sig);
    std::vector<NaiveRule> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        total *= 4;
    for (std::uint64_t code = 1; code < total; ++code) {
        NaiveRule r;
        std::uint64_t c = code;
        for (const auto& a : atoms) {
            switch (c % 4) {
            case 1: r.head.insert(a); break;
            case 2: r.pos.insert(a); break;
            case 3: r.neg.insert(a); break;
            default: break;
            }
            c /= 4;
        }
        out.push_back(std::move(r));
    }
    return out;
}

/// SE models over `sig` of every rule over `sig` satisfied by all of `models`:
/// the models of the knowledge-level result of forgetting when `models` is a
/// projection.
inline Models rule_closure(const Models& models, const Names& sig) {
    std::vector<NaiveRule> consequences;
    for (auto& r : all_rules(sig)) {
        bool all = true;
        for (const auto& [x, y] : models)
            if (!satisfies(x, y, r)) {
                all = false;
                break;
            }
        if (all)
            consequences.push_back(std::move(r));
    }
    return se_models(consequences, sig);
}

inline Models to_models(const seforget::SEModelSet& s) {
    Models out;
    for (const auto& w : s.models())
        out.insert({names(w.x), names(w.y)});
    return out;
}

/// φ[p/⊤] ∨ φ[p/⊥] evaluated under `assignment` (p itself is ignored).
inline bool boole_forget_holds(const seforget::ClauseSet& clauses, const std::string& p, const Names& assignment) {
    auto holds_with = [&](bool p_value) {
        for (const auto& c : clauses) {
            bool sat = false;
            for (const auto& a : c.pos)
                sat |= a.name() == p ? p_value : assignment.count(a.name()) > 0;
            for (const auto& a : c.neg)
                sat |= a.name() == p ? !p_value : assignment.count(a.name()) == 0;
            if (!sat)
                return false;
        }
        return true;
    };
    return holds_with(true) || holds_with(false);
}

inline bool clauses_hold(const seforget::ClauseSet& clauses, const Names& assignment) {
    for (const auto& c : clauses) {
        bool sat = false;
        for (const auto& a : c.pos)
            sat |= assignment.count(a.name()) > 0;
        for (const auto& a : c.neg)
            sat |= assignment.count(a.name()) == 0;
        if (!sat)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- random instances

struct ProgramShape {
    std::size_t max_atoms = 5;
    std::size_t max_rules = 6;
    std::size_t max_head = 2;
    std::size_t max_body = 3;
};

inline const std::vector<std::string>& atom_pool() {
    static const std::vector<std::string> pool{"a", "b", "c", "d", "e", "f", "g", "h"};
    return pool;
}

inline seforget::Rule random_rule(std::mt19937& rng, const std::vector<std::string>& atoms, std::size_t max_head,
                                  std::size_t max_body) {
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    std::uniform_int_distribution<std::size_t> hsize(0, max_head), bsize(0, max_body);
    std::bernoulli_distribution negative(0.5);
    while (true) {
        seforget::RawRule raw;
        for (std::size_t i = hsize(rng); i > 0; --i)
            raw.head.emplace_back(atoms[pick(rng)]);
        for (std::size_t i = bsize(rng); i > 0; --i)
            (negative(rng) ? raw.neg : raw.pos).emplace_back(atoms[pick(rng)]);
        if (!raw.head.empty() || !raw.pos.empty() || !raw.neg.empty())
            return seforget::canonicalize_rule(raw);
    }
}

inline seforget::Program random_program(std::mt19937& rng, const ProgramShape& shape = {}) {
    std::uniform_int_distribution<std::size_t> natoms(1, shape.max_atoms), nrules(1, shape.max_rules);
    const std::vector<std::string> atoms(atom_pool().begin(), atom_pool().begin() + natoms(rng));
    std::vector<seforget::Rule> rules;
    for (std::size_t i = nrules(rng); i > 0; --i)
        rules.push_back(random_rule(rng, atoms, shape.max_head, shape.max_body));
    return seforget::Program(std::move(rules));
}

inline seforget::Atom random_atom_of(std::mt19937& rng, const seforget::Signature& sig) {
    std::uniform_int_distribution<std::size_t> pick(0, sig.size() - 1);
    return sig[pick(rng)];
}

inline seforget::ClauseSet random_clauses(std::mt19937& rng, std::size_t max_atoms, std::size_t max_clauses,
                                          std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> natoms(1, max_atoms), nclauses(0, max_clauses), len(0, max_len);
    const std::vector<std::string> atoms(atom_pool().begin(), atom_pool().begin() + natoms(rng));
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    std::bernoulli_distribution negative(0.5);
    std::vector<seforget::Clause> clauses;
    for (std::size_t i = nclauses(rng); i > 0; --i) {
        std::vector<seforget::Atom> pos, neg;
        for (std::size_t j = len(rng); j > 0; --j)
            (negative(rng) ? neg : pos).emplace_back(atoms[pick(rng)]);
        clauses.push_back({seforget::AtomSet(std::move(pos)), seforget::AtomSet(std::move(neg))});
    }
    return seforget::ClauseSet(std::move(clauses));
}

} // namespace oracle
