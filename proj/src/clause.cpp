#include "seforget/clause.hpp"

#include <algorithm>

namespace seforget {

ClauseSet::ClauseSet(std::initializer_list<Clause> clauses) : ClauseSet(std::vector<Clause>(clauses)) {}

ClauseSet::ClauseSet(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool ClauseSet::contains(const Clause& c) const noexcept {
    return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

Signature ClauseSet::signature() const {
    Signature sig;
    for (const auto& c : clauses_)
        sig = sig.unite(c.pos).unite(c.neg);
    return sig;
}

} // namespace seforget
