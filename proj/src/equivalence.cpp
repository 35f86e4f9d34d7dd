#include "folia/equivalence.hpp"

#include <algorithm>

namespace folia {

namespace {

using Attach = SeparatrixId::Attach;
using Monotonicity = InducedSigma::Monotonicity;

StripToken vflip_token(const StripToken& tok) {
    StripToken out = tok;
    for (Sign& s : out.signs) s = -s;
    return out;
}

StripToken hflip_token(const StripToken& tok) {
    switch (tok.kind) {
        case StripToken::Kind::LeftInfinite:
            return StripToken::right_infinite(tok.signs[0]);
        case StripToken::Kind::RightInfinite:
            return StripToken::left_infinite(tok.signs[0]);
        case StripToken::Kind::BoundedDistinct:
            return StripToken::bounded_distinct(tok.signs[3], tok.signs[2], tok.signs[1],
                                                tok.signs[0]);
        case StripToken::Kind::BoundedEqual:
            return StripToken::bounded_equal(tok.signs[1], tok.signs[0]);
    }
    throw InternalError("unreachable token kind");
}

Attach swap_attach(Attach a) {
    switch (a) {
        case Attach::Left: return Attach::Right;
        case Attach::Right: return Attach::Left;
        case Attach::Both: return Attach::Both;
    }
    throw InternalError("unreachable attachment");
}

bool reverses_strips(Transformation t) {
    return t == Transformation::HFlip || t == Transformation::Rotation;
}

}  // namespace

Transformation compose(Transformation a, Transformation b) {
    bool h = (a == Transformation::HFlip || a == Transformation::Rotation) !=
             (b == Transformation::HFlip || b == Transformation::Rotation);
    bool v = (a == Transformation::VFlip || a == Transformation::Rotation) !=
             (b == Transformation::VFlip || b == Transformation::Rotation);
    if (h && v) return Transformation::Rotation;
    if (h) return Transformation::HFlip;
    if (v) return Transformation::VFlip;
    return Transformation::Identity;
}

bool orientation_preserving(Transformation t) {
    return t == Transformation::Identity || t == Transformation::Rotation;
}

const char* transformation_name(Transformation t) {
    switch (t) {
        case Transformation::Identity: return "identity";
        case Transformation::HFlip: return "hflip";
        case Transformation::VFlip: return "vflip";
        case Transformation::Rotation: return "rotation";
    }
    return "?";
}

const char* monotonicity_name(InducedSigma::Monotonicity m) {
    switch (m) {
        case Monotonicity::Increasing: return "increasing";
        case Monotonicity::Decreasing: return "decreasing";
        case Monotonicity::NotMonotone: return "not_monotone";
        case Monotonicity::IllDefined: return "ill_defined";
    }
    return "?";
}

const char* obstruction_code(Obstruction o) {
    switch (o) {
        case Obstruction::KMismatch: return "K_MISMATCH";
        case Obstruction::TokenMismatch: return "TOKEN_MISMATCH";
        case Obstruction::SigmaIllDefined: return "SIGMA_ILL_DEFINED";
        case Obstruction::SigmaNotMonotone: return "SIGMA_NOT_MONOTONE";
        case Obstruction::SigmaNotIncreasing: return "SIGMA_NOT_INCREASING";
        case Obstruction::ExtensionFails: return "EXTENSION_FAILS";
        case Obstruction::TrivialVsNontrivial: return "TRIVIAL_VS_NONTRIVIAL";
    }
    return "?";
}

std::vector<StripToken> transform_tokens(const std::vector<StripToken>& tokens, Transformation t) {
    std::vector<StripToken> out = tokens;
    if (reverses_strips(t)) {
        std::reverse(out.begin(), out.end());
        for (StripToken& tok : out) tok = hflip_token(tok);
    }
    if (t == Transformation::VFlip || t == Transformation::Rotation)
        for (StripToken& tok : out) tok = vflip_token(tok);
    return out;
}

int transform_strip(int strip, Transformation t, int k) {
    return reverses_strips(t) ? k - strip : strip;
}

SeparatrixId transform_separatrix(const SeparatrixId& id, Transformation t, int k) {
    if (!reverses_strips(t)) return id;
    if (id.kind == SeparatrixId::Kind::Vertical) return SeparatrixId::vertical(k - 1 - id.index);
    return SeparatrixId::inner(k - id.index, swap_attach(id.attach));
}

std::vector<Transformation> token_match(const Configuration& p, const Configuration& q) {
    std::vector<Transformation> out;
    for (Transformation t : kAllTransformations)
        if (p.tokens == transform_tokens(q.tokens, t)) out.push_back(t);
    return out;
}

InducedSigma induced_sigma(const Configuration& p, const Configuration& q, Transformation t) {
    int k = p.root_count();
    if (q.root_count() != k)
        throw PreconditionViolated("induced_sigma needs configurations with equal root counts");
    InducedSigma sigma;
    for (int j = 0; j < k; ++j) {
        int pj = reverses_strips(t) ? k - 1 - j : j;
        sigma.pairs.emplace_back(p.boundary_values[static_cast<size_t>(j)],
                                 q.boundary_values[static_cast<size_t>(pj)]);
    }

    // Group pairs into classes of equal 'from' values; the relation is a
    // function iff each class has consistent 'to' values, and injectivity
    // across classes makes it a bijection onto the other bifurcation set.
    struct ClassRep {
        const AlgReal* from;
        const AlgReal* to;
    };
    std::vector<ClassRep> classes;
    for (const auto& [from, to] : sigma.pairs) {
        bool found = false;
        for (const ClassRep& cls : classes) {
            if (compare(*cls.from, from) == Cmp::Equal) {
                found = true;
                if (compare(*cls.to, to) != Cmp::Equal) {
                    sigma.monotonicity = Monotonicity::IllDefined;
                    return sigma;
                }
                break;
            }
        }
        if (!found) classes.push_back({&from, &to});
    }
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            if (compare(*classes[i].to, *classes[j].to) == Cmp::Equal) {
                sigma.monotonicity = Monotonicity::IllDefined;
                return sigma;
            }

    std::sort(classes.begin(), classes.end(), [](const ClassRep& a, const ClassRep& b) {
        return compare(*a.from, *b.from) == Cmp::Less;
    });
    bool increasing = true, decreasing = true;
    for (size_t i = 0; i + 1 < classes.size(); ++i) {
        Cmp c = compare(*classes[i].to, *classes[i + 1].to);
        if (c != Cmp::Less) increasing = false;
        if (c != Cmp::Greater) decreasing = false;
    }
    sigma.monotonicity = increasing  ? Monotonicity::Increasing
                         : decreasing ? Monotonicity::Decreasing
                                      : Monotonicity::NotMonotone;
    return sigma;
}

namespace {

enum class LevelSide { Below, Above };

// With a single bifurcation value, every region has exactly one finite level
// bound, which is that value; the side is read off from which bound is finite.
LevelSide region_side(const CanonicalRegion& reg) {
    if (reg.upper.kind == LevelBound::Kind::Finite) return LevelSide::Below;
    if (reg.lower.kind == LevelBound::Kind::Finite) return LevelSide::Above;
    throw PreconditionViolated("region without finite level bound in singleton check");
}

const CanonicalRegion& find_region(const Configuration& conf, int strip,
                                   const std::vector<SeparatrixId>& boundary) {
    for (const CanonicalRegion& reg : conf.regions)
        if (reg.strip == strip && reg.boundary == boundary) return reg;
    throw PreconditionViolated("no region with the transformed boundary exists");
}

}  // namespace

bool singleton_extension_check(const Configuration& p, const Configuration& q, Transformation t) {
    if (p.bifurcation.size() != 1 || q.bifurcation.size() != 1)
        throw PreconditionViolated("singleton extension check needs |B| = 1 on both sides");
    if (!orientation_preserving(t))
        throw PreconditionViolated("singleton extension check needs Identity or Rotation");
    int k = p.root_count();
    for (const CanonicalRegion& reg : p.regions) {
        std::vector<SeparatrixId> image_boundary;
        for (const SeparatrixId& id : reg.boundary)
            image_boundary.push_back(transform_separatrix(id, t, k));
        std::sort(image_boundary.begin(), image_boundary.end());
        const CanonicalRegion& image =
            find_region(q, transform_strip(reg.strip, t, k), image_boundary);
        if (region_side(reg) == region_side(image)) return true;
    }
    return false;
}

EquivalenceVerdict decide(const Configuration& p, const Configuration& q) {
    EquivalenceVerdict v;
    int kp = p.root_count(), kq = q.root_count();

    if (kp == 0 && kq == 0) {
        InducedSigma trivial;
        trivial.monotonicity = Monotonicity::Increasing;
        for (VerdictPart* part : {&v.foliation_o, &v.foliation_top, &v.function_o, &v.function_top}) {
            part->value = true;
            part->witness_transformation = Transformation::Identity;
        }
        v.function_o.witness_sigma = trivial;
        v.function_top.witness_sigma = trivial;
        return v;
    }
    if (kp == 0 || kq == 0) {
        for (VerdictPart* part : {&v.foliation_o, &v.foliation_top, &v.function_o, &v.function_top})
            part->obstruction = Obstruction::TrivialVsNontrivial;
        return v;
    }

    std::vector<Transformation> matches = token_match(p, q);
    Obstruction no_match_code = kp != kq ? Obstruction::KMismatch : Obstruction::TokenMismatch;
    if (matches.empty()) {
        for (VerdictPart* part : {&v.foliation_o, &v.foliation_top, &v.function_o, &v.function_top})
            part->obstruction = no_match_code;
        return v;
    }

    v.foliation_top.value = true;
    v.foliation_top.witness_transformation = matches.front();

    auto oriented = std::find_if(matches.begin(), matches.end(), orientation_preserving);
    if (oriented != matches.end()) {
        v.foliation_o.value = true;
        v.foliation_o.witness_transformation = *oriented;
    } else {
        v.foliation_o.obstruction = Obstruction::TokenMismatch;
    }

    bool saw_well_defined = false;
    for (Transformation t : matches) {
        InducedSigma sigma = induced_sigma(p, q, t);
        if (sigma.monotonicity == Monotonicity::Increasing ||
            sigma.monotonicity == Monotonicity::Decreasing) {
            v.function_top.value = true;
            v.function_top.witness_transformation = t;
            v.function_top.witness_sigma = std::move(sigma);
            break;
        }
        if (sigma.monotonicity != Monotonicity::IllDefined) saw_well_defined = true;
    }
    if (!v.function_top.value)
        v.function_top.obstruction =
            saw_well_defined ? Obstruction::SigmaNotMonotone : Obstruction::SigmaIllDefined;

    bool saw_extension_fail = false, saw_not_increasing = false, saw_oriented = false;
    for (Transformation t : matches) {
        if (!orientation_preserving(t)) continue;
        saw_oriented = true;
        InducedSigma sigma = induced_sigma(p, q, t);
        if (sigma.monotonicity == Monotonicity::IllDefined) continue;
        if (sigma.monotonicity != Monotonicity::Increasing) {
            saw_not_increasing = true;
            continue;
        }
        if (p.bifurcation.size() == 1 && !singleton_extension_check(p, q, t)) {
            saw_extension_fail = true;
            continue;
        }
        v.function_o.value = true;
        v.function_o.witness_transformation = t;
        v.function_o.witness_sigma = std::move(sigma);
        break;
    }
    if (!v.function_o.value) {
        if (!saw_oriented)
            v.function_o.obstruction = Obstruction::TokenMismatch;
        else if (saw_extension_fail)
            v.function_o.obstruction = Obstruction::ExtensionFails;
        else if (saw_not_increasing)
            v.function_o.obstruction = Obstruction::SigmaNotIncreasing;
        else
            v.function_o.obstruction = Obstruction::SigmaIllDefined;
    }
    return v;
}

}  // namespace folia
