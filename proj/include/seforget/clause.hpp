#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

#include "seforget/core.hpp"

namespace seforget {

/// Propositional clause: the disjunction of `pos` and the negations of `neg`.
struct Clause {
    AtomSet pos;
    AtomSet neg;

    bool empty() const noexcept { return pos.empty() && neg.empty(); }
    bool is_tautology() const noexcept { return pos.intersects(neg); }
    bool mentions(const Atom& a) const noexcept { return pos.contains(a) || neg.contains(a); }

    friend bool operator==(const Clause&, const Clause&) = default;
    friend auto operator<=>(const Clause&, const Clause&) = default;
};

/// Set of clauses in canonical order. The empty clause is allowed.
class ClauseSet {
public:
    using const_iterator = std::vector<Clause>::const_iterator;

    ClauseSet() = default;
    ClauseSet(std::initializer_list<Clause> clauses);
    explicit ClauseSet(std::vector<Clause> clauses);

    bool empty() const noexcept { return clauses_.empty(); }
    std::size_t size() const noexcept { return clauses_.size(); }
    const_iterator begin() const noexcept { return clauses_.begin(); }
    const_iterator end() const noexcept { return clauses_.end(); }
    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    bool contains(const Clause& c) const noexcept;

    Signature signature() const;

    friend bool operator==(const ClauseSet&, const ClauseSet&) = default;

private:
    std::vector<Clause> clauses_;
};

} // namespace seforget
