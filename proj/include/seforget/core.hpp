#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seforget/errors.hpp"

namespace seforget {

/// A propositional atom. Names match [a-z][A-Za-z0-9_]*.
class Atom {
public:
    explicit Atom(std::string name);

    static bool valid_name(std::string_view name) noexcept;

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept { return a.name_ <=> b.name_; }

private:
    std::string name_;
};

/// Sorted, duplicate-free set of atoms stored contiguously.
class AtomSet {
public:
    using const_iterator = std::vector<Atom>::const_iterator;

    AtomSet() = default;
    AtomSet(std::initializer_list<Atom> atoms);
    explicit AtomSet(std::vector<Atom> atoms);
    /// Convenience for literals in tests and bindings; each name is validated.
    static AtomSet of(std::initializer_list<std::string_view> names);

    bool empty() const noexcept { return atoms_.empty(); }
    std::size_t size() const noexcept { return atoms_.size(); }
    const_iterator begin() const noexcept { return atoms_.begin(); }
    const_iterator end() const noexcept { return atoms_.end(); }
    const Atom& operator[](std::size_t i) const { return atoms_[i]; }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }

    bool contains(const Atom& a) const noexcept;
    bool subset_of(const AtomSet& other) const noexcept;
    bool intersects(const AtomSet& other) const noexcept;

    AtomSet unite(const AtomSet& other) const;
    AtomSet intersect(const AtomSet& other) const;
    AtomSet minus(const AtomSet& other) const;
    AtomSet without(const Atom& a) const;
    AtomSet with(const Atom& a) const;

    friend bool operator==(const AtomSet&, const AtomSet&) = default;
    friend std::strong_ordering operator<=>(const AtomSet& a, const AtomSet& b) noexcept;

private:
    std::vector<Atom> atoms_;
};

using Signature = AtomSet;

/// Rule literals as written, before deduplication and ordering.
struct RawRule {
    std::vector<Atom> head;
    std::vector<Atom> pos;
    std::vector<Atom> neg;
};

/// Disjunctive rule `head ← pos, not neg` in canonical form.
class Rule {
public:
    /// Throws EmptyRule when all three sets are empty.
    Rule(AtomSet head, AtomSet pos, AtomSet neg);

    /// Returns nullopt instead of throwing for the empty rule.
    static std::optional<Rule> make(AtomSet head, AtomSet pos, AtomSet neg);

    const AtomSet& head() const noexcept { return head_; }
    const AtomSet& pos() const noexcept { return pos_; }
    const AtomSet& neg() const noexcept { return neg_; }

    bool is_constraint() const noexcept { return head_.empty(); }
    bool is_fact() const noexcept { return pos_.empty() && neg_.empty(); }
    bool mentions(const Atom& a) const noexcept;
    Signature signature() const;

    friend bool operator==(const Rule&, const Rule&) = default;
    friend std::strong_ordering operator<=>(const Rule& a, const Rule& b) noexcept;

private:
    AtomSet head_;
    AtomSet pos_;
    AtomSet neg_;
};

Rule canonicalize_rule(const RawRule& raw);
/// Canonical rules are already deduplicated and ordered; this is the identity.
Rule canonicalize_rule(const Rule& rule);

/// Finite set of rules kept in canonical order.
class Program {
public:
    using const_iterator = std::vector<Rule>::const_iterator;

    Program() = default;
    Program(std::initializer_list<Rule> rules);
    explicit Program(std::vector<Rule> rules);

    bool empty() const noexcept { return rules_.empty(); }
    std::size_t size() const noexcept { return rules_.size(); }
    const_iterator begin() const noexcept { return rules_.begin(); }
    const_iterator end() const noexcept { return rules_.end(); }
    const std::vector<Rule>& rules() const noexcept { return rules_; }

    bool contains(const Rule& r) const noexcept;
    Program with(const Rule& r) const;
    Program unite(const Program& other) const;

    friend bool operator==(const Program&, const Program&) = default;

private:
    std::vector<Rule> rules_;
};

Signature program_signature(const Program& program);

/// Keeps exactly the rules whose atoms all lie in `sig`.
Program restrict_program(const Program& program, const Signature& sig);

} // namespace seforget
