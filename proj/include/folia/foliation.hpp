#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "folia/algreal.hpp"
#include "folia/bipoly.hpp"

namespace folia {

// One of the vertical strips the plane decomposes into: the regions between
// consecutive zeros of s, plus the two unbounded ones.
struct Boundary {
    enum class Kind { MinusInfinity, Root, PlusInfinity };
    Kind kind = Kind::MinusInfinity;
    int root_index = -1;  // meaningful iff kind == Root
    friend bool operator==(const Boundary&, const Boundary&) = default;
};

struct Strip {
    int index = 0;
    Boundary left, right;
    friend bool operator==(const Strip&, const Strip&) = default;
};

// The asymptotic behavior of the distinguished leaves of a strip, read off at
// the strip's finite boundaries. For a strip (a, b) write c_a, c_b for the
// values attained on the vertical lines x=a, x=b; sigma entries record whether
// the corresponding solution curve y = (c - r(x)) / s(x) tends to +inf or
// -inf at the annotated boundary.
struct StripToken {
    enum class Kind { LeftInfinite, RightInfinite, BoundedDistinct, BoundedEqual };
    Kind kind = Kind::LeftInfinite;
    // LeftInfinite:    {sigma_b}                                (limit at b-)
    // RightInfinite:   {sigma_a}                                (limit at a+)
    // BoundedDistinct: {sigma_aa, sigma_ab, sigma_ba, sigma_bb} (curve x boundary)
    // BoundedEqual:    {sigma_a, sigma_b}                       (single curve)
    std::vector<Sign> signs;

    static StripToken left_infinite(Sign sb) { return {Kind::LeftInfinite, {sb}}; }
    static StripToken right_infinite(Sign sa) { return {Kind::RightInfinite, {sa}}; }
    static StripToken bounded_distinct(Sign aa, Sign ab, Sign ba, Sign bb) {
        return {Kind::BoundedDistinct, {aa, ab, ba, bb}};
    }
    static StripToken bounded_equal(Sign a, Sign b) { return {Kind::BoundedEqual, {a, b}}; }

    friend bool operator==(const StripToken&, const StripToken&) = default;
};

// Identity of a separatrix: either a vertical line x = root_j, or the
// distinguished curve of a strip attached to its left/right/both boundaries.
struct SeparatrixId {
    enum class Kind { Vertical, Inner };
    enum class Attach { Left, Right, Both };
    Kind kind = Kind::Vertical;
    int index = 0;                      // root index (Vertical) or strip index (Inner)
    Attach attach = Attach::Left;       // meaningful iff kind == Inner

    static SeparatrixId vertical(int j) { return {Kind::Vertical, j, Attach::Left}; }
    static SeparatrixId inner(int strip, Attach a) { return {Kind::Inner, strip, a}; }

    friend bool operator==(const SeparatrixId&, const SeparatrixId&) = default;
    friend auto operator<=>(const SeparatrixId&, const SeparatrixId&) = default;
};

struct LevelBound {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::NegInf;
    std::optional<AlgReal> value;  // set iff kind == Finite

    static LevelBound neg_inf() { return {Kind::NegInf, std::nullopt}; }
    static LevelBound pos_inf() { return {Kind::PosInf, std::nullopt}; }
    static LevelBound finite(AlgReal v) { return {Kind::Finite, std::move(v)}; }
};

// A maximal union of leaves sharing the same boundary separatrices: within a
// strip, the leaves whose levels range over one component of the real line
// minus the strip's boundary values.
struct CanonicalRegion {
    int strip = 0;
    LevelBound lower, upper;
    std::vector<SeparatrixId> boundary;  // sorted, pairwise distinct per strip
};

// The complete combinatorial description of the foliation induced by
// p(x,y) = r(x) + s(x) y.
struct Configuration {
    LinearLikeMap map;
    std::vector<AlgReal> roots;            // zeros of s, increasing
    std::vector<AlgReal> boundary_values;  // r at each root, aligned with roots
    std::vector<Sign> rprime_signs;        // sign of r' at each root, never Zero
    std::vector<Sign> strip_s_signs;       // constant sign of s on each strip (k+1)
    std::vector<StripToken> tokens;        // k+1 entries; empty when k == 0
    std::vector<CanonicalRegion> regions;
    std::vector<AlgReal> bifurcation;      // sorted distinct boundary values

    int root_count() const { return static_cast<int>(roots.size()); }
    int strip_count() const { return root_count() + 1; }
};

std::vector<Strip> strips(const Configuration& conf);

// Why a map fails to be an everywhere-regular finite-type input.
struct SubmersionFailure {
    enum class Kind { SimpleZero, CriticalValueOnFiber, OutOfScope };
    Kind kind = Kind::OutOfScope;
    std::optional<AlgReal> root;  // the offending zero of s, when applicable
    std::string message() const;
};

struct SubmersionError : std::runtime_error {
    explicit SubmersionError(SubmersionFailure f)
        : std::runtime_error(f.message()), failure(std::move(f)) {}
    SubmersionFailure failure;
};

// Empty result means the map is accepted: s is not identically zero, and
// every real zero of s has multiplicity >= 2 and nonvanishing r' there.
std::optional<SubmersionFailure> validate_submersion(const LinearLikeMap& m);

// Full invariant computation. Throws SubmersionError when validation fails.
Configuration build_configuration(const LinearLikeMap& m);

// Sorted distinct values attained on the vertical lines (empty iff s has no
// real zeros). Throws SubmersionError when validation fails.
std::vector<AlgReal> bifurcation_set(const LinearLikeMap& m);

// Number of connected components of the level set at height c.
int fiber_component_count(const LinearLikeMap& m, const AlgReal& c);

struct SeparatrixInfo {
    SeparatrixId id;
    AlgReal level;
};

// All separatrices with the level each lies on; empty for the trivial case.
std::vector<SeparatrixInfo> separatrices(const Configuration& conf);

// Recompute every token entry through one-sided sign queries on the explicit
// polynomials c - r and s, bypassing the closed-form derivative rule. Only
// available when all boundary values are rational; used as a cross-check.
std::optional<std::vector<StripToken>> tokens_via_side_signs(const LinearLikeMap& m);

}  // namespace folia
