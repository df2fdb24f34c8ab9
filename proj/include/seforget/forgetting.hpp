#pragma once

// Forgetting atoms from disjunctive programs under SE semantics.
//
// A single atom `a` is forgotten by normalizing the program, keeping the rules
// that do not mention `a`, and adding every resolvent on `a` obtainable with
// the two SE inference rules
//
//   WGPPE   A1 ← B1, a, not C1      A2 ; a ← B2, not C2
//           ---------------------------------------------
//                  A1 ; A2 ← B1, B2, not C1, not C2
//
//   S-HYP   Ai ← Bi, not xi, not Ci  (1 ≤ i ≤ n)      A ← x1, …, xn, not C
//           -------------------------------------------------------------
//             A1 ; … ; An ← B1, …, Bn, not C1, …, not Cn, not A, not C
//
// A single pass can miss consequences. With saturation enabled (the default)
// the resolvents come instead from eliminating `a` in a clausal encoding of
// the SE models, so the result entails every rule over the remaining atoms
// that the input entails. The worst case is exponential; dense programs
// without facts are the slow ones.

#include <cstddef>
#include <vector>

#include "seforget/clause.hpp"
#include "seforget/core.hpp"
#include "seforget/semantics.hpp"

namespace seforget {

enum class Step1Mode {
    sound,        ///< delete head atoms that also occur negated in the body
    paper_literal ///< drop tautologies, contradiction rules and non-minimal rules outright
};

struct ForgetOptions {
    Step1Mode step1_mode = Step1Mode::sound;
    bool minimize_output = true;
    bool saturate = true;
    /// Keep rules that are subsumed by other rules; they may matter once the
    /// result is combined with other programs.
    bool keep_local_rules = false;
};

/// Resolvents of one kind. The empty rule cannot be a Rule, so deriving it
/// (the input is unsatisfiable) is reported through `falsum`.
struct ResolventSet {
    std::vector<Rule> rules; ///< canonical order, no duplicates, no tautologies
    bool falsum = false;

    friend bool operator==(const ResolventSet&, const ResolventSet&) = default;
};

/// head ∩ pos ≠ ∅, or pos ∩ neg ≠ ∅. Both forms are SE-valid.
bool is_tautology(const Rule& r) noexcept;

/// head ∩ neg ≠ ∅, i.e. `A ; c ← B, not c, not C`.
bool is_contradiction_pattern(const Rule& r) noexcept;

/// `general` is contained literal-wise in `specific`, and the two differ.
bool subsumes(const Rule& general, const Rule& specific) noexcept;

/// Drops every rule that is subsumed by another rule of the program.
Program remove_subsumed(const Program& program);

Program preprocess(const Program& program, const ForgetOptions& opts = {});

ResolventSet wgppe_resolvents(const Program& program, const Atom& a);
ResolventSet shyp_resolvents(const Program& program, const Atom& a);
/// wgppe_resolvents ∪ shyp_resolvents.
ResolventSet res_lp(const Program& program, const Atom& a);

/// An unsatisfiable program over `sig`: `:- x.` and `:- not x.` for each of
/// its atoms, so that later forgetting steps still see the whole signature.
/// Empty when `sig` is empty.
Program falsum_program(const Signature& sig);

Program forget_atom(const Program& program, const Atom& a, const ForgetOptions& opts = {});

/// Forgets the atoms of `atoms` one at a time in canonical order.
Program forget_set(const Program& program, const Signature& atoms, const ForgetOptions& opts = {});

/// Propositional resolvents on `p`; tautologies are discarded.
ClauseSet res_pc(const ClauseSet& clauses, const Atom& p);
ClauseSet forget_pc(const ClauseSet& clauses, const Atom& p);

/// Programs of several agents with the atoms each agrees to forget.
struct AgentSuite {
    std::vector<Program> programs;
    std::vector<Signature> compromise;

    AgentSuite(std::vector<Program> programs, std::vector<Signature> compromise);
};

/// Union of the per-agent forgetting results.
Program forget_suite(const AgentSuite& suite, const ForgetOptions& opts);

/// Options used for agreements unless the caller overrides them: as the
/// defaults, but keeping locally redundant rules.
ForgetOptions agreement_options();

/// Answer sets of forget_suite.
std::vector<AtomSet> agreements(const AgentSuite& suite, const ForgetOptions& opts = agreement_options(),
                                const EnumerationLimits& limits = {});

} // namespace seforget
