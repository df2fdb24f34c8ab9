#include "seforget/semantics.hpp"

#include <algorithm>

namespace seforget {

namespace {

constexpr std::size_t kMaxMaskAtoms = 63;

struct MaskRule {
    Mask head = 0;
    Mask pos = 0;
    Mask neg = 0;
};

class AtomIndex {
public:
    explicit AtomIndex(const Signature& sig) : sig_(sig) {
        if (sig.size() > kMaxMaskAtoms)
            throw SignatureTooLarge(sig.size(), kMaxMaskAtoms);
    }

    Mask mask(const AtomSet& atoms) const {
        Mask m = 0;
        for (const auto& a : atoms) {
            auto it = std::lower_bound(sig_.begin(), sig_.end(), a);
            if (it == sig_.end() || *it != a)
                throw SignatureMismatch("atom '" + a.name() + "' is outside the signature");
            m |= Mask{1} << static_cast<unsigned>(it - sig_.begin());
        }
        return m;
    }

    AtomSet atoms(Mask m) const {
        std::vector<Atom> out;
        for (std::size_t i = 0; i < sig_.size(); ++i)
            if (m >> i & 1)
                out.push_back(sig_[i]);
        return AtomSet(std::move(out));
    }

    std::vector<MaskRule> compile(const Program& program) const {
        std::vector<MaskRule> out;
        out.reserve(program.size());
        for (const auto& r : program)
            out.push_back({mask(r.head()), mask(r.pos()), mask(r.neg())});
        return out;
    }

    std::size_t size() const noexcept { return sig_.size(); }

private:
    const Signature& sig_;
};

bool body_holds(const MaskRule& r, Mask pos_world, Mask neg_world) {
    return (r.pos & ~pos_world) == 0 && (r.neg & neg_world) == 0;
}

bool model_of(const std::vector<MaskRule>& rules, Mask y) {
    for (const auto& r : rules)
        if (body_holds(r, y, y) && (r.head & y) == 0)
            return false;
    return true;
}

// X ⊨ P^Y, for the rules already filtered to those with neg ∩ Y = ∅.
bool reduct_model_of(const std::vector<MaskRule>& active, Mask x) {
    for (const auto& r : active)
        if ((r.pos & ~x) == 0 && (r.head & x) == 0)
            return false;
    return true;
}

std::vector<MaskRule> active_rules(const std::vector<MaskRule>& rules, Mask y) {
    std::vector<MaskRule> out;
    for (const auto& r : rules)
        if ((r.neg & y) == 0)
            out.push_back(r);
    return out;
}

void check_limit(std::size_t n, std::size_t limit) {
    if (n > limit)
        throw SignatureTooLarge(n, limit);
    if (n > kMaxMaskAtoms)
        throw SignatureTooLarge(n, kMaxMaskAtoms);
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

bool same_signature_rule_check(const Signature& over, const Program& program) {
    return program_signature(program).subset_of(over);
}

} // namespace

// ---------------------------------------------------------------- value types

Interpretation::Interpretation(AtomSet atoms_, Signature over_) : atoms(std::move(atoms_)), over(std::move(over_)) {
    if (!atoms.subset_of(over))
        throw SignatureMismatch("interpretation mentions atoms outside its signature");
}

SEInterpretation::SEInterpretation(AtomSet x_, AtomSet y_, Signature over_)
    : x(std::move(x_)), y(std::move(y_)), over(std::move(over_)) {
    if (!x.subset_of(y) || !y.subset_of(over))
        throw SignatureMismatch("SE interpretation requires X ⊆ Y ⊆ signature");
}

SEModelSet::SEModelSet(Signature over) : over_(std::move(over)) {
    if (over_.size() > kMaxMaskAtoms)
        throw SignatureTooLarge(over_.size(), kMaxMaskAtoms);
}

SEModelSet::SEModelSet(Signature over, std::vector<SEInterpretation> models) : SEModelSet(std::move(over)) {
    for (const auto& w : models) {
        if (w.over != over_)
            throw SignatureMismatch("SE interpretation over a different signature");
        models_.emplace_back(mask_of(w.x), mask_of(w.y));
    }
    std::sort(models_.begin(), models_.end(), [](const MaskPair& a, const MaskPair& b) {
        return std::pair(a.second, a.first) < std::pair(b.second, b.first);
    });
    models_.erase(std::unique(models_.begin(), models_.end()), models_.end());
}

SEModelSet SEModelSet::from_masks(Signature over, std::vector<MaskPair> models) {
    SEModelSet s(std::move(over));
    const Mask full = full_mask(s.over_.size());
    for (const auto& [x, y] : models)
        if ((x & ~y) != 0 || (y & ~full) != 0)
            throw SignatureMismatch("mask pair is not an SE interpretation over the signature");
    std::sort(models.begin(), models.end(), [](const MaskPair& a, const MaskPair& b) {
        return std::pair(a.second, a.first) < std::pair(b.second, b.first);
    });
    models.erase(std::unique(models.begin(), models.end()), models.end());
    s.models_ = std::move(models);
    return s;
}

Mask SEModelSet::mask_of(const AtomSet& atoms) const { return AtomIndex(over_).mask(atoms); }

AtomSet SEModelSet::atoms_of(Mask m) const { return AtomIndex(over_).atoms(m); }

bool SEModelSet::contains(const AtomSet& x, const AtomSet& y) const {
    if (!x.subset_of(over_) || !y.subset_of(over_))
        return false;
    const MaskPair key{mask_of(x), mask_of(y)};
    return std::binary_search(models_.begin(), models_.end(), key, [](const MaskPair& a, const MaskPair& b) {
        return std::pair(a.second, a.first) < std::pair(b.second, b.first);
    });
}

std::vector<SEInterpretation> SEModelSet::models() const {
    AtomIndex idx(over_);
    std::vector<SEInterpretation> out;
    out.reserve(models_.size());
    for (const auto& [x, y] : models_)
        out.emplace_back(idx.atoms(x), idx.atoms(y), over_);
    return out;
}

// ---------------------------------------------------------------- satisfaction and reduct

bool classically_satisfies(const Interpretation& y, const Program& program) {
    if (!same_signature_rule_check(y.over, program))
        throw SignatureMismatch("program mentions atoms outside the interpretation's signature");
    for (const auto& r : program)
        if (r.pos().subset_of(y.atoms) && !r.neg().intersects(y.atoms) && !r.head().intersects(y.atoms))
            return false;
    return true;
}

bool classically_satisfies(const AtomSet& y, const PositiveProgram& program) {
    for (const auto& r : program)
        if (r.pos.subset_of(y) && !r.head.intersects(y))
            return false;
    return true;
}

PositiveProgram reduct(const Program& program, const AtomSet& y) {
    PositiveProgram out;
    for (const auto& r : program)
        if (!r.neg().intersects(y))
            out.push_back({r.head(), r.pos()});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool se_satisfies(const SEInterpretation& w, const Program& program) {
    if (!same_signature_rule_check(w.over, program))
        throw SignatureMismatch("program mentions atoms outside the SE interpretation's signature");
    return classically_satisfies(Interpretation(w.y, w.over), program) &&
           classically_satisfies(w.x, reduct(program, w.y));
}

// ---------------------------------------------------------------- enumeration

std::vector<AtomSet> answer_sets(const Program& program, const EnumerationLimits& limits) {
    const Signature sig = program_signature(program);
    check_limit(sig.size(), limits.answer_set_atoms);
    AtomIndex idx(sig);
    const auto rules = idx.compile(program);
    std::vector<AtomSet> out;
    const Mask full = full_mask(sig.size());
    for (Mask y = 0;; ++y) {
        if (model_of(rules, y)) {
            const auto active = active_rules(rules, y);
            bool minimal = true;
            // proper submasks of y, largest first
            for (Mask x = (y - 1) & y; y != 0; x = (x - 1) & y) {
                if (reduct_model_of(active, x)) {
                    minimal = false;
                    break;
                }
                if (x == 0)
                    break;
            }
            if (minimal)
                out.push_back(idx.atoms(y));
        }
        if (y == full)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

SEModelSet se_models(const Program& program, const Signature& sig, const EnumerationLimits& limits) {
    if (!same_signature_rule_check(sig, program))
        throw SignatureMismatch("program mentions atoms outside the given signature");
    check_limit(sig.size(), limits.se_model_atoms);
    AtomIndex idx(sig);
    const auto rules = idx.compile(program);
    std::vector<SEModelSet::MaskPair> out;
    const Mask full = full_mask(sig.size());
    for (Mask y = 0;; ++y) {
        if (model_of(rules, y)) {
            const auto active = active_rules(rules, y);
            for (Mask x = y;; x = (x - 1) & y) {
                if (reduct_model_of(active, x))
                    out.emplace_back(x, y);
                if (x == 0)
                    break;
            }
        }
        if (y == full)
            break;
    }
    return SEModelSet::from_masks(sig, std::move(out));
}

bool satisfiable(const Program& program, const EnumerationLimits& limits) {
    const Signature sig = program_signature(program);
    check_limit(sig.size(), limits.answer_set_atoms);
    AtomIndex idx(sig);
    const auto rules = idx.compile(program);
    const Mask full = full_mask(sig.size());
    for (Mask y = 0;; ++y) {
        if (model_of(rules, y))
            return true;
        if (y == full)
            return false;
    }
}

bool strongly_equivalent(const Program& p, const Program& q, const std::optional<Signature>& sig,
                         const EnumerationLimits& limits) {
    const Signature over = sig ? *sig : program_signature(p).unite(program_signature(q));
    return se_models(p, over, limits) == se_models(q, over, limits);
}

bool se_entails(const Program& program, const Rule& rule, const std::optional<Signature>& sig,
                const EnumerationLimits& limits) {
    const Signature over = sig ? *sig : program_signature(program).unite(rule.signature());
    if (!rule.signature().subset_of(over))
        throw SignatureMismatch("rule mentions atoms outside the given signature");
    const SEModelSet models = se_models(program, over, limits);
    AtomIndex idx(over);
    const MaskRule r{idx.mask(rule.head()), idx.mask(rule.pos()), idx.mask(rule.neg())};
    for (const auto& [x, y] : models.masks()) {
        if (body_holds(r, y, y) && (r.head & y) == 0)
            return false;
        if ((r.neg & y) == 0 && (r.pos & ~x) == 0 && (r.head & x) == 0)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- signature changes

namespace {

// Maps bits of `from` onto bits of `to` for the atoms they share.
std::vector<std::pair<unsigned, unsigned>> shared_bits(const Signature& from, const Signature& to) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = std::lower_bound(to.begin(), to.end(), from[i]);
        if (it != to.end() && *it == from[i])
            out.emplace_back(static_cast<unsigned>(i), static_cast<unsigned>(it - to.begin()));
    }
    return out;
}

Mask remap(Mask m, const std::vector<std::pair<unsigned, unsigned>>& bits) {
    Mask out = 0;
    for (auto [from, to] : bits)
        if (m >> from & 1)
            out |= Mask{1} << to;
    return out;
}

} // namespace

SEModelSet project_models(const SEModelSet& models, const Signature& sub) {
    if (!sub.subset_of(models.over()))
        throw SignatureMismatch("projection target is not a subset of the model signature");
    const auto bits = shared_bits(models.over(), sub);
    std::vector<SEModelSet::MaskPair> out;
    out.reserve(models.size());
    for (const auto& [x, y] : models.masks())
        out.emplace_back(remap(x, bits), remap(y, bits));
    return SEModelSet::from_masks(sub, std::move(out));
}

SEModelSet expand_models(const SEModelSet& models, const Signature& super) {
    if (!models.over().subset_of(super))
        throw SignatureMismatch("expansion target does not contain the model signature");
    const Signature extra = super.minus(models.over());
    if (super.size() > kMaxMaskAtoms)
        throw SignatureTooLarge(super.size(), kMaxMaskAtoms);
    const auto bits = shared_bits(models.over(), super);
    const auto extra_bits = shared_bits(extra, super);
    std::vector<SEModelSet::MaskPair> out;
    const Mask extra_full = full_mask(extra.size());
    for (const auto& [x, y] : models.masks()) {
        const Mask bx = remap(x, bits), by = remap(y, bits);
        for (Mask ey = 0;; ++ey) {
            for (Mask ex = ey;; ex = (ex - 1) & ey) {
                out.emplace_back(bx | remap(ex, extra_bits), by | remap(ey, extra_bits));
                if (ex == 0)
                    break;
            }
            if (ey == extra_full)
                break;
        }
    }
    return SEModelSet::from_masks(super, std::move(out));
}

bool expressible_by_disjunctive_program(const SEModelSet& models) {
    const auto& ms = models.masks();
    // no rule is built from nothing, so over ∅ every program has the model (∅,∅)
    if (ms.empty() && models.over().empty())
        return false;
    auto has = [&](Mask x, Mask y) {
        return std::binary_search(ms.begin(), ms.end(), SEModelSet::MaskPair{x, y},
                                  [](const SEModelSet::MaskPair& a, const SEModelSet::MaskPair& b) {
                                      return std::pair(a.second, a.first) < std::pair(b.second, b.first);
                                  });
    };
    std::vector<Mask> totals;
    for (const auto& [x, y] : ms)
        if (x == y)
            totals.push_back(y);
    for (const auto& [x, y] : ms) {
        if (!has(y, y))
            return false;
        for (Mask z : totals)
            if ((y & ~z) == 0 && !has(x, z))
                return false;
    }
    return true;
}

} // namespace seforget
