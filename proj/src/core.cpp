#include "seforget/core.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

namespace seforget {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_ident(char c) {
    return is_lower(c) || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

template <class T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

// ---------------------------------------------------------------- Atom

Atom::Atom(std::string name) : name_(std::move(name)) {
    if (!valid_name(name_))
        throw InvalidAtom("invalid atom name '" + name_ + "'");
}

bool Atom::valid_name(std::string_view name) noexcept {
    if (name.empty() || !is_lower(name.front()))
        return false;
    return std::all_of(name.begin() + 1, name.end(), is_ident);
}

// ---------------------------------------------------------------- AtomSet

AtomSet::AtomSet(std::initializer_list<Atom> atoms) : atoms_(atoms) { sort_unique(atoms_); }

AtomSet::AtomSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) { sort_unique(atoms_); }

AtomSet AtomSet::of(std::initializer_list<std::string_view> names) {
    std::vector<Atom> atoms;
    atoms.reserve(names.size());
    for (auto n : names)
        atoms.emplace_back(std::string(n));
    return AtomSet(std::move(atoms));
}

bool AtomSet::contains(const Atom& a) const noexcept {
    return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

bool AtomSet::subset_of(const AtomSet& other) const noexcept {
    return size() <= other.size() && std::includes(other.begin(), other.end(), begin(), end());
}

bool AtomSet::intersects(const AtomSet& other) const noexcept {
    auto i = begin(), j = other.begin();
    while (i != end() && j != other.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return true;
    }
    return false;
}

AtomSet AtomSet::unite(const AtomSet& other) const {
    AtomSet out;
    out.atoms_.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.atoms_));
    return out;
}

AtomSet AtomSet::intersect(const AtomSet& other) const {
    AtomSet out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out.atoms_));
    return out;
}

AtomSet AtomSet::minus(const AtomSet& other) const {
    AtomSet out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out.atoms_));
    return out;
}

AtomSet AtomSet::without(const Atom& a) const {
    AtomSet out;
    out.atoms_.reserve(size());
    std::copy_if(begin(), end(), std::back_inserter(out.atoms_), [&](const Atom& x) { return x != a; });
    return out;
}

AtomSet AtomSet::with(const Atom& a) const {
    if (contains(a))
        return *this;
    AtomSet out = *this;
    out.atoms_.insert(std::lower_bound(out.atoms_.begin(), out.atoms_.end(), a), a);
    return out;
}

std::strong_ordering operator<=>(const AtomSet& a, const AtomSet& b) noexcept {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------- Rule

Rule::Rule(AtomSet head, AtomSet pos, AtomSet neg)
    : head_(std::move(head)), pos_(std::move(pos)), neg_(std::move(neg)) {
    if (head_.empty() && pos_.empty() && neg_.empty())
        throw EmptyRule();
}

std::optional<Rule> Rule::make(AtomSet head, AtomSet pos, AtomSet neg) {
    if (head.empty() && pos.empty() && neg.empty())
        return std::nullopt;
    return Rule(std::move(head), std::move(pos), std::move(neg));
}

bool Rule::mentions(const Atom& a) const noexcept {
    return head_.contains(a) || pos_.contains(a) || neg_.contains(a);
}

Signature Rule::signature() const { return head_.unite(pos_).unite(neg_); }

std::strong_ordering operator<=>(const Rule& a, const Rule& b) noexcept {
    if (auto c = a.head_ <=> b.head_; c != 0)
        return c;
    if (auto c = a.pos_ <=> b.pos_; c != 0)
        return c;
    return a.neg_ <=> b.neg_;
}

Rule canonicalize_rule(const RawRule& raw) {
    return Rule(AtomSet(raw.head), AtomSet(raw.pos), AtomSet(raw.neg));
}

Rule canonicalize_rule(const Rule& rule) { return rule; }

// ---------------------------------------------------------------- Program

Program::Program(std::initializer_list<Rule> rules) : rules_(rules) { sort_unique(rules_); }

Program::Program(std::vector<Rule> rules) : rules_(std::move(rules)) { sort_unique(rules_); }

bool Program::contains(const Rule& r) const noexcept {
    return std::binary_search(rules_.begin(), rules_.end(), r);
}

Program Program::with(const Rule& r) const {
    if (contains(r))
        return *this;
    Program out = *this;
    out.rules_.insert(std::lower_bound(out.rules_.begin(), out.rules_.end(), r), r);
    return out;
}

Program Program::unite(const Program& other) const {
    Program out;
    out.rules_.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.rules_));
    return out;
}

Signature program_signature(const Program& program) {
    std::vector<Atom> atoms;
    for (const auto& r : program) {
        atoms.insert(atoms.end(), r.head().begin(), r.head().end());
        atoms.insert(atoms.end(), r.pos().begin(), r.pos().end());
        atoms.insert(atoms.end(), r.neg().begin(), r.neg().end());
    }
    return Signature(std::move(atoms));
}

Program restrict_program(const Program& program, const Signature& sig) {
    std::vector<Rule> kept;
    for (const auto& r : program)
        if (r.head().subset_of(sig) && r.pos().subset_of(sig) && r.neg().subset_of(sig))
            kept.push_back(r);
    return Program(std::move(kept));
}

} // namespace seforget
