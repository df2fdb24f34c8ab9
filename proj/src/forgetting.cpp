#include "seforget/forgetting.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>

namespace seforget {

// ---------------------------------------------------------------- rule classification

bool is_tautology(const Rule& r) noexcept { return r.head().intersects(r.pos()) || r.pos().intersects(r.neg()); }

bool is_contradiction_pattern(const Rule& r) noexcept { return r.head().intersects(r.neg()); }

bool subsumes(const Rule& general, const Rule& specific) noexcept {
    return general.head().subset_of(specific.head()) && general.pos().subset_of(specific.pos()) &&
           general.neg().subset_of(specific.neg()) && general != specific;
}

namespace {

// Sound Step-1 treatment of a single rule: nullopt for tautologies, head atoms
// that also occur negated are deleted.
std::optional<Rule> normalize_rule(const Rule& r) {
    if (is_tautology(r))
        return std::nullopt;
    if (is_contradiction_pattern(r))
        return Rule(r.head().minus(r.neg()), r.pos(), r.neg());
    return r;
}

// Collects resolvents, dropping tautologies and recording the empty rule.
class ResolventSink {
public:
    void emit(AtomSet head, AtomSet pos, AtomSet neg) {
        auto r = Rule::make(std::move(head), std::move(pos), std::move(neg));
        if (!r) {
            falsum_ = true;
            return;
        }
        if (!is_tautology(*r))
            rules_.insert(std::move(*r));
    }

    bool falsum() const noexcept { return falsum_; }
    const std::set<Rule>& rules() const noexcept { return rules_; }

    ResolventSet take() {
        ResolventSet out{{rules_.begin(), rules_.end()}, falsum_};
        rules_.clear();
        falsum_ = false;
        return out;
    }

private:
    std::set<Rule> rules_;
    bool falsum_ = false;
};

// Single pass over the rules of `program` exactly as given; partners are not
// filtered by subsumption and every positive body atom must be matched.
ResolventSet resolve_program(const Program& program, const Atom& a, bool wgppe, bool shyp) {
    ResolventSink sink;
    if (wgppe) {
        for (const auto& r1 : program) {
            if (!r1.pos().contains(a))
                continue;
            for (const auto& r2 : program) {
                if (!r2.head().contains(a))
                    continue;
                sink.emit(r1.head().unite(r2.head().without(a)), r1.pos().without(a).unite(r2.pos()),
                          r1.neg().unite(r2.neg()));
            }
        }
    }
    if (shyp) {
        std::map<Atom, std::vector<const Rule*>> negated;
        for (const auto& r : program)
            for (const auto& c : r.neg())
                negated[c].push_back(&r);
        for (const auto& main : program) {
            if (!main.pos().contains(a))
                continue;
            const auto& body = main.pos().atoms();
            std::vector<const std::vector<const Rule*>*> options;
            bool feasible = true;
            for (const auto& x : body) {
                auto it = negated.find(x);
                if (it == negated.end()) {
                    feasible = false;
                    break;
                }
                options.push_back(&it->second);
            }
            if (!feasible)
                continue;
            std::vector<std::size_t> pick(body.size(), 0);
            while (true) {
                std::vector<Atom> head, pos, neg;
                for (std::size_t k = 0; k < body.size(); ++k) {
                    const Rule* ri = (*options[k])[pick[k]];
                    head.insert(head.end(), ri->head().begin(), ri->head().end());
                    pos.insert(pos.end(), ri->pos().begin(), ri->pos().end());
                    for (const auto& c : ri->neg())
                        if (c != body[k])
                            neg.push_back(c);
                }
                neg.insert(neg.end(), main.head().begin(), main.head().end());
                neg.insert(neg.end(), main.neg().begin(), main.neg().end());
                sink.emit(AtomSet(std::move(head)), AtomSet(std::move(pos)), AtomSet(std::move(neg)));
                std::size_t k = 0;
                while (k < body.size() && ++pick[k] == options[k]->size())
                    pick[k++] = 0;
                if (k == body.size())
                    break;
            }
        }
    }
    return sink.take();
}

} // namespace

// ---------------------------------------------------------------- Step 1

Program remove_subsumed(const Program& program) {
    std::vector<Rule> kept;
    const auto& rules = program.rules();
    for (const auto& r : rules) {
        bool dominated = false;
        for (const auto& s : rules) {
            if (s.head().size() + s.pos().size() + s.neg().size() >=
                r.head().size() + r.pos().size() + r.neg().size())
                continue;
            if (subsumes(s, r)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            kept.push_back(r);
    }
    return Program(std::move(kept));
}

namespace {

Program step1(const Program& program, Step1Mode mode, bool drop_subsumed) {
    std::vector<Rule> kept;
    for (const auto& r : program) {
        if (mode == Step1Mode::paper_literal) {
            if (!is_tautology(r) && !is_contradiction_pattern(r))
                kept.push_back(r);
        } else if (auto n = normalize_rule(r)) {
            kept.push_back(std::move(*n));
        }
    }
    Program out(std::move(kept));
    return drop_subsumed ? remove_subsumed(out) : out;
}

} // namespace

Program preprocess(const Program& program, const ForgetOptions& opts) {
    return step1(program, opts.step1_mode, true);
}

// ---------------------------------------------------------------- resolvents

ResolventSet wgppe_resolvents(const Program& program, const Atom& a) { return resolve_program(program, a, true, false); }

ResolventSet shyp_resolvents(const Program& program, const Atom& a) { return resolve_program(program, a, false, true); }

ResolventSet res_lp(const Program& program, const Atom& a) { return resolve_program(program, a, true, true); }

Program falsum_program(const Signature& sig) {
    std::vector<Rule> rules;
    for (const auto& x : sig) {
        rules.emplace_back(AtomSet{}, AtomSet{x}, AtomSet{});
        rules.emplace_back(AtomSet{}, AtomSet{}, AtomSet{x});
    }
    return Program(std::move(rules));
}

// ---------------------------------------------------------------- forgetting

namespace {

struct ForgetResult {
    Program program;
    bool falsum = false;
};

// SE models as classical models: an atom x stands for "x ∈ X" and x' for
// "x ∈ Y", with x → x' for every atom. A rule A ← B, not C then reads as the
// here clause A ∨ ¬B ∨ C' and the there clause A' ∨ ¬B' ∨ C'.
struct HtClause {
    AtomSet here_pos, here_neg, there_pos, there_neg;

    bool empty() const noexcept {
        return here_pos.empty() && here_neg.empty() && there_pos.empty() && there_neg.empty();
    }
    bool subset_of(const HtClause& o) const noexcept {
        return here_pos.subset_of(o.here_pos) && here_neg.subset_of(o.here_neg) &&
               there_pos.subset_of(o.there_pos) && there_neg.subset_of(o.there_neg);
    }
    std::size_t size() const noexcept {
        return here_pos.size() + here_neg.size() + there_pos.size() + there_neg.size();
    }

    friend bool operator==(const HtClause&, const HtClause&) = default;
    friend auto operator<=>(const HtClause&, const HtClause&) = default;
};

enum class Slot { here_pos, here_neg, there_pos, there_neg };

constexpr Slot complement(Slot s) {
    switch (s) {
    case Slot::here_pos: return Slot::here_neg;
    case Slot::here_neg: return Slot::here_pos;
    case Slot::there_pos: return Slot::there_neg;
    case Slot::there_neg: return Slot::there_pos;
    }
    return s;
}

AtomSet& slot(HtClause& c, Slot s) {
    switch (s) {
    case Slot::here_pos: return c.here_pos;
    case Slot::here_neg: return c.here_neg;
    case Slot::there_pos: return c.there_pos;
    case Slot::there_neg: return c.there_neg;
    }
    return c.here_pos;
}

const AtomSet& slot(const HtClause& c, Slot s) { return slot(const_cast<HtClause&>(c), s); }

constexpr Slot all_slots[] = {Slot::here_pos, Slot::here_neg, Slot::there_pos, Slot::there_neg};

// nullopt when valid (x ∨ ¬x, x' ∨ ¬x', ¬x ∨ x'); x ∨ x' shrinks to x' and
// ¬x ∨ ¬x' to ¬x.
std::optional<HtClause> simplify(HtClause c) {
    if (c.here_pos.intersects(c.here_neg) || c.there_pos.intersects(c.there_neg) ||
        c.here_neg.intersects(c.there_pos))
        return std::nullopt;
    c.here_pos = c.here_pos.minus(c.there_pos);
    c.there_neg = c.there_neg.minus(c.here_neg);
    return c;
}

HtClause here_clause(const Rule& r) { return {r.head(), r.pos(), r.neg(), {}}; }
HtClause there_clause(const Rule& r) { return {{}, {}, r.head().unite(r.neg()), r.pos()}; }

// The strongest rule implied by a clause: a negated there-atom ¬x' is
// weakened to ¬x, which then joins the positive body.
std::optional<Rule> rule_of(const HtClause& c) {
    return Rule::make(c.here_pos, c.here_neg.unite(c.there_neg), c.there_pos);
}

HtClause resolve(const HtClause& c1, const HtClause& c2, const Atom& x, Slot s) {
    HtClause r;
    for (Slot t : all_slots)
        slot(r, t) = slot(c1, t).unite(slot(c2, t));
    slot(r, s) = slot(r, s).without(x);
    slot(r, complement(s)) = slot(r, complement(s)).without(x);
    return r;
}

// Clause set with occurrence lists and subsumption on insertion. Clauses are
// marked dead rather than erased so that ids stay valid.
class ClauseStore {
public:
    // False if `c` is subsumed; otherwise stores it, retires the clauses it
    // subsumes and returns true.
    bool add(const HtClause& c, bool derived) {
        if (c.empty())
            falsum_ = true;
        if (falsum_ || subsumed(c))
            return false;
        for (std::size_t id : covered_by(c))
            kill(id);
        const std::size_t id = clauses_.size();
        clauses_.push_back(c);
        alive_.push_back(true);
        derived_.push_back(derived);
        for (Slot s : all_slots)
            for (const auto& x : slot(c, s))
                index_[key(x, s)].push_back(id);
        return true;
    }

    std::vector<std::size_t> occurrences(const Atom& x, Slot s) const {
        std::vector<std::size_t> out;
        if (auto it = index_.find(key(x, s)); it != index_.end())
            for (std::size_t id : it->second)
                if (alive_[id])
                    out.push_back(id);
        return out;
    }

    void kill(std::size_t id) { alive_[id] = false; }
    bool alive(std::size_t id) const { return alive_[id]; }
    bool derived(std::size_t id) const { return derived_[id]; }
    const HtClause& clause(std::size_t id) const { return clauses_[id]; }
    std::size_t size() const { return clauses_.size(); }
    bool falsum() const { return falsum_; }

private:
    using Key = std::pair<Atom, Slot>;
    static Key key(const Atom& x, Slot s) { return {x, s}; }

    bool subsumed(const HtClause& c) const {
        for (Slot s : all_slots)
            for (const auto& x : slot(c, s))
                if (auto it = index_.find(key(x, s)); it != index_.end())
                    for (std::size_t id : it->second)
                        if (alive_[id] && clauses_[id].subset_of(c))
                            return true;
        return false;
    }

    std::vector<std::size_t> covered_by(const HtClause& c) const {
        const std::vector<std::size_t>* best = nullptr;
        for (Slot s : all_slots)
            for (const auto& x : slot(c, s)) {
                auto it = index_.find(key(x, s));
                if (it == index_.end())
                    return {};
                if (!best || it->second.size() < best->size())
                    best = &it->second;
            }
        std::vector<std::size_t> out;
        if (best)
            for (std::size_t id : *best)
                if (alive_[id] && c.subset_of(clauses_[id]) && !(c == clauses_[id]))
                    out.push_back(id);
        return out;
    }

    std::vector<HtClause> clauses_;
    std::vector<bool> alive_;
    std::vector<bool> derived_;
    std::map<Key, std::vector<std::size_t>> index_;
    bool falsum_ = false;
};

// Davis-Putnam elimination of x in slot s and its complement.
void eliminate(ClauseStore& store, const Atom& x, Slot s) {
    const auto positive = store.occurrences(x, s);
    const auto negative = store.occurrences(x, complement(s));
    for (std::size_t i : positive)
        for (std::size_t j : negative) {
            if (!store.alive(i) || !store.alive(j))
                continue;
            if (auto r = simplify(resolve(store.clause(i), store.clause(j), x, s)))
                store.add(*r, true);
            if (store.falsum())
                return;
        }
    for (std::size_t id : store.occurrences(x, s))
        store.kill(id);
    for (std::size_t id : store.occurrences(x, complement(s)))
        store.kill(id);
}

// The clauses left after elimination describe the projection exactly, but a
// negated there-atom has no counterpart in rule syntax. Resolving such
// literals away against clauses holding the positive there-atom recovers
// the rules that the plain weakening loses. A clause without here literals
// already reads back exactly, so only mixed clauses start a step, and only
// derived ones to begin with.
bool needs_closure(const HtClause& c) {
    return !c.there_neg.empty() && !(c.here_pos.empty() && c.here_neg.empty());
}

void close_there_negations(ClauseStore& store) {
    std::vector<std::size_t> frontier;
    for (std::size_t id = 0; id < store.size(); ++id)
        if (store.alive(id) && store.derived(id) && needs_closure(store.clause(id)))
            frontier.push_back(id);
    while (!frontier.empty() && !store.falsum()) {
        const std::size_t first_new = store.size();
        for (std::size_t i : frontier) {
            if (!store.alive(i))
                continue;
            const HtClause c1 = store.clause(i);
            for (const auto& x : c1.there_neg)
                for (std::size_t j : store.occurrences(x, Slot::there_pos)) {
                    if (auto r = simplify(resolve(c1, store.clause(j), x, Slot::there_neg)))
                        store.add(*r, true);
                    if (store.falsum())
                        return;
                    if (!store.alive(i))
                        break;
                }
        }
        frontier.clear();
        for (std::size_t id = first_new; id < store.size(); ++id)
            if (store.alive(id) && needs_closure(store.clause(id)))
                frontier.push_back(id);
    }
}

// Every rule free of `a` that the normalized program entails and that the
// program's own a-free rules do not already give.
ForgetResult eliminate_atom(const Program& program, const Atom& a) {
    bool in_body = false, elsewhere = false;
    for (const auto& r : program) {
        in_body = in_body || r.pos().contains(a);
        elsewhere = elsewhere || r.head().contains(a) || r.neg().contains(a);
    }
    if (!in_body || !elsewhere) // a is pure and nothing follows through it
        return {};
    ClauseStore store;
    for (const auto& r : program)
        for (const auto& c : {here_clause(r), there_clause(r)})
            if (auto s = simplify(c))
                store.add(*s, false);
    store.add(HtClause{{}, {a}, {a}, {}}, false); // a → a'
    eliminate(store, a, Slot::here_pos);
    eliminate(store, a, Slot::there_pos);
    close_there_negations(store);
    if (store.falsum())
        return {{}, true};
    std::vector<Rule> out;
    for (std::size_t id = 0; id < store.size(); ++id)
        if (store.alive(id) && store.derived(id))
            if (auto r = rule_of(store.clause(id)))
                if (auto n = normalize_rule(*r))
                    out.push_back(std::move(*n));
    return {Program(std::move(out)), false};
}

// Classical consistency by DPLL over the clause reading of the rules
// (head ∨ ¬pos ∨ neg). Literals are ±(index+1).
class Dpll {
public:
    explicit Dpll(const Program& program) {
        const Signature sig = program_signature(program);
        values_.assign(sig.size() + 1, 0);
        auto var = [&](const Atom& x) {
            return static_cast<int>(std::lower_bound(sig.begin(), sig.end(), x) - sig.begin()) + 1;
        };
        for (const auto& r : program) {
            std::vector<int> c;
            for (const auto& x : r.head())
                c.push_back(var(x));
            for (const auto& x : r.pos())
                c.push_back(-var(x));
            for (const auto& x : r.neg())
                c.push_back(var(x));
            clauses_.push_back(std::move(c));
        }
    }

    bool satisfiable() { return search(); }

private:
    int value(int lit) const { return lit > 0 ? values_[lit] : -values_[-lit]; }

    void assign(int lit) {
        values_[std::abs(lit)] = lit > 0 ? 1 : -1;
        trail_.push_back(std::abs(lit));
    }

    // Unit propagation; false on conflict. Sets `branch` to an unassigned literal if any.
    bool propagate(int& branch) {
        bool again = true;
        while (again) {
            again = false;
            branch = 0;
            for (const auto& c : clauses_) {
                int open = 0, last = 0;
                bool sat = false;
                for (int lit : c) {
                    const int v = value(lit);
                    if (v > 0) {
                        sat = true;
                        break;
                    }
                    if (v == 0) {
                        ++open;
                        last = lit;
                    }
                }
                if (sat)
                    continue;
                if (open == 0)
                    return false;
                if (open == 1) {
                    assign(last);
                    again = true;
                } else if (branch == 0) {
                    branch = last;
                }
            }
        }
        return true;
    }

    bool search() {
        const std::size_t mark = trail_.size();
        int branch = 0;
        if (propagate(branch)) {
            if (branch == 0)
                return true;
            for (int lit : {branch, -branch}) {
                const std::size_t inner = trail_.size();
                assign(lit);
                if (search())
                    return true;
                undo(inner);
            }
        }
        undo(mark);
        return false;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            values_[trail_.back()] = 0;
            trail_.pop_back();
        }
    }

    std::vector<std::vector<int>> clauses_;
    std::vector<int> values_;
    std::vector<int> trail_;
};

// A result whose signature shrank below `residual` may be inconsistent with
// the dropped atoms gone; re-encode it so that later steps keep them.
Program settle(Program result, const Signature& residual) {
    if (program_signature(result) != residual && !Dpll(result).satisfiable())
        return falsum_program(residual);
    return result;
}

// c1 ⊨ c2 for simplified clauses; x is stronger than x' and ¬x' than ¬x.
bool clause_entails(const HtClause& c1, const HtClause& c2) {
    return c1.here_pos.subset_of(c2.here_pos.unite(c2.there_pos)) &&
           c1.here_neg.subset_of(c2.here_neg) && c1.there_pos.subset_of(c2.there_pos) &&
           c1.there_neg.subset_of(c2.there_neg.unite(c2.here_neg));
}

// Drops each derived rule whose here clause follows from one clause of a
// surviving rule. The rule's there clause follows from its here clause, so
// the rule as a whole is redundant.
Program prune_derived(const Program& kept, const Program& derived) {
    std::vector<std::pair<HtClause, HtClause>> fixed;
    for (const auto& r : kept)
        fixed.emplace_back(here_clause(r), there_clause(r));
    const std::vector<Rule> candidates(derived.begin(), derived.end());
    std::vector<std::pair<HtClause, HtClause>> own;
    for (const auto& r : candidates)
        own.emplace_back(here_clause(r), there_clause(r));
    const auto entails = [](const auto& p, const HtClause& h) {
        return clause_entails(p.first, h) || clause_entails(p.second, h);
    };
    std::vector<bool> alive(candidates.size(), true);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const HtClause& h = own[i].first;
        bool redundant = std::ranges::any_of(fixed, [&](const auto& p) { return entails(p, h); });
        for (std::size_t j = 0; j < candidates.size() && !redundant; ++j)
            redundant = j != i && alive[j] && entails(own[j], h);
        alive[i] = !redundant;
    }
    std::vector<Rule> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (alive[i])
            out.push_back(candidates[i]);
    return Program(std::move(out));
}

Program drop_mentions(const Program& program, const Atom& a) {
    std::vector<Rule> out;
    for (const auto& r : program)
        if (!r.mentions(a))
            out.push_back(r);
    return Program(std::move(out));
}

ForgetResult forget_atom_impl(const Program& program, const Atom& a, const ForgetOptions& opts) {
    const Program normalized = step1(program, opts.step1_mode, !opts.keep_local_rules);
    const Program kept = drop_mentions(normalized, a);

    Program derived;
    if (opts.saturate) {
        auto sat = eliminate_atom(normalized, a);
        if (sat.falsum)
            return {{}, true};
        derived = prune_derived(kept, sat.program);
    } else {
        auto res = res_lp(normalized, a);
        if (res.falsum)
            return {{}, true};
        derived = drop_mentions(Program(std::move(res.rules)), a);
    }

    Program result = kept.unite(derived);
    if (opts.minimize_output && !opts.keep_local_rules)
        result = preprocess(result);
    return {std::move(result), false};
}

} // namespace

Program forget_atom(const Program& program, const Atom& a, const ForgetOptions& opts) {
    const Signature residual = program_signature(program).without(a);
    auto res = forget_atom_impl(program, a, opts);
    if (res.falsum)
        return falsum_program(residual);
    return settle(std::move(res.program), residual);
}

Program forget_set(const Program& program, const Signature& atoms, const ForgetOptions& opts) {
    Program current = program;
    for (const auto& a : atoms) {
        auto res = forget_atom_impl(current, a, opts);
        if (res.falsum)
            return falsum_program(program_signature(program).minus(atoms));
        current = std::move(res.program);
    }
    return settle(std::move(current), program_signature(program).minus(atoms));
}

// ---------------------------------------------------------------- propositional clauses

ClauseSet res_pc(const ClauseSet& clauses, const Atom& p) {
    std::vector<Clause> out;
    for (const auto& c1 : clauses) {
        if (!c1.pos.contains(p) || c1.is_tautology())
            continue;
        for (const auto& c2 : clauses) {
            if (!c2.neg.contains(p) || c2.is_tautology())
                continue;
            Clause r{c1.pos.without(p).unite(c2.pos), c1.neg.unite(c2.neg.without(p))};
            if (!r.is_tautology())
                out.push_back(std::move(r));
        }
    }
    return ClauseSet(std::move(out));
}

ClauseSet forget_pc(const ClauseSet& clauses, const Atom& p) {
    std::vector<Clause> out;
    for (const auto& c : clauses)
        if (!c.mentions(p))
            out.push_back(c);
    for (const auto& c : res_pc(clauses, p))
        out.push_back(c);
    return ClauseSet(std::move(out));
}

// ---------------------------------------------------------------- agreements

AgentSuite::AgentSuite(std::vector<Program> programs_, std::vector<Signature> compromise_)
    : programs(std::move(programs_)), compromise(std::move(compromise_)) {
    if (programs.size() != compromise.size())
        throw Error("agent suite needs one forget set per program");
}

Program forget_suite(const AgentSuite& suite, const ForgetOptions& opts) {
    Program combined;
    for (std::size_t i = 0; i < suite.programs.size(); ++i)
        combined = combined.unite(forget_set(suite.programs[i], suite.compromise[i], opts));
    return combined;
}

ForgetOptions agreement_options() {
    ForgetOptions opts;
    opts.keep_local_rules = true;
    return opts;
}

std::vector<AtomSet> agreements(const AgentSuite& suite, const ForgetOptions& opts, const EnumerationLimits& limits) {
    return answer_sets(forget_suite(suite, opts), limits);
}

} // namespace seforget
