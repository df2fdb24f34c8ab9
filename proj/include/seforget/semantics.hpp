#pragma once

// Brute-force SE semantics. Everything here enumerates interpretations and is
// meant as the trusted reference for the forgetting transformations, so it
// favours obviously-correct code over speed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "seforget/core.hpp"

namespace seforget {

struct EnumerationLimits {
    std::size_t answer_set_atoms = 24; ///< 2^n interpretations
    std::size_t se_model_atoms = 15;   ///< 3^n SE interpretations
};

/// Classical interpretation: the atoms in `atoms` are true, the rest of `over` false.
struct Interpretation {
    AtomSet atoms;
    Signature over;

    Interpretation(AtomSet atoms, Signature over);
    friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

/// SE interpretation (X,Y) with X ⊆ Y ⊆ over.
struct SEInterpretation {
    AtomSet x;
    AtomSet y;
    Signature over;

    SEInterpretation(AtomSet x, AtomSet y, Signature over);
    friend bool operator==(const SEInterpretation&, const SEInterpretation&) = default;
};

using Mask = std::uint64_t;

/// A set of SE interpretations over one signature. Stored as bit masks where
/// bit i stands for the i-th atom of `over` in canonical order; models are
/// kept sorted by (y, x).
class SEModelSet {
public:
    using MaskPair = std::pair<Mask, Mask>; ///< (x, y)

    explicit SEModelSet(Signature over);
    SEModelSet(Signature over, std::vector<SEInterpretation> models);
    static SEModelSet from_masks(Signature over, std::vector<MaskPair> models);

    const Signature& over() const noexcept { return over_; }
    std::size_t size() const noexcept { return models_.size(); }
    bool empty() const noexcept { return models_.empty(); }
    const std::vector<MaskPair>& masks() const noexcept { return models_; }

    bool contains(const AtomSet& x, const AtomSet& y) const;
    std::vector<SEInterpretation> models() const;

    Mask mask_of(const AtomSet& atoms) const;
    AtomSet atoms_of(Mask m) const;

    friend bool operator==(const SEModelSet&, const SEModelSet&) = default;

private:
    Signature over_;
    std::vector<MaskPair> models_;
};

/// A negation-free rule as produced by the reduct. Unlike Rule it may be
/// empty (the reduct of `:- not c` w.r.t. Y with c ∉ Y is falsity).
struct PositiveRule {
    AtomSet head;
    AtomSet pos;
    friend bool operator==(const PositiveRule&, const PositiveRule&) = default;
    friend auto operator<=>(const PositiveRule&, const PositiveRule&) = default;
};

using PositiveProgram = std::vector<PositiveRule>;

bool classically_satisfies(const Interpretation& y, const Program& program);
bool classically_satisfies(const AtomSet& y, const PositiveProgram& program);

/// Gelfond–Lifschitz reduct P^Y, sorted and duplicate-free.
PositiveProgram reduct(const Program& program, const AtomSet& y);

/// All answer sets, sorted. Enumerates subsets of Sig(P).
std::vector<AtomSet> answer_sets(const Program& program, const EnumerationLimits& limits = {});

bool se_satisfies(const SEInterpretation& w, const Program& program);

SEModelSet se_models(const Program& program, const Signature& sig, const EnumerationLimits& limits = {});

/// SE(P) ≠ ∅, i.e. P has a classical model.
bool satisfiable(const Program& program, const EnumerationLimits& limits = {});

/// `sig` defaults to Sig(P) ∪ Sig(Q).
bool strongly_equivalent(const Program& p, const Program& q, const std::optional<Signature>& sig = std::nullopt,
                         const EnumerationLimits& limits = {});

/// P ⊨s r. `sig` defaults to Sig(P) ∪ Sig(r).
bool se_entails(const Program& program, const Rule& rule, const std::optional<Signature>& sig = std::nullopt,
                const EnumerationLimits& limits = {});

SEModelSet project_models(const SEModelSet& models, const Signature& sub);
SEModelSet expand_models(const SEModelSet& models, const Signature& super);

/// True iff some disjunctive program has exactly these SE models: the set is
/// closed under (X,Y) ↦ (Y,Y), and (X,Y), (Z,Z) ∈ S with Y ⊆ Z imply (X,Z) ∈ S.
/// Over the empty signature the empty set is not expressible, since rules
/// need at least one literal.
bool expressible_by_disjunctive_program(const SEModelSet& models);

} // namespace seforget
