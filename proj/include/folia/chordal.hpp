#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "folia/bipoly.hpp"
#include "folia/equivalence.hpp"
#include "folia/foliation.hpp"

namespace folia {

// One sampled leaf of the plane foliation induced by p(x,y) = r(x) + s(x) y
// with rational root data: either a vertical line x = a at a rational zero of
// s, or the graph of x -> (level - r(x)) / s(x) over an open strip whose
// finite endpoints are rational.  A missing strip endpoint means the strip is
// unbounded on that side.
struct SampleLeaf {
    enum class Kind { Vertical, Graph };
    Kind kind = Kind::Vertical;
    Rat x;                        // Vertical: the line x = x
    std::optional<Rat> lo, hi;    // Graph: open strip (lo, hi)
    Rat level;                    // Graph: the value the map takes on the leaf
    LinearLikeMap map;            // Graph: the defining map

    static SampleLeaf vertical(Rat a) {
        SampleLeaf l;
        l.kind = Kind::Vertical;
        l.x = std::move(a);
        return l;
    }
    static SampleLeaf graph(std::optional<Rat> lo, std::optional<Rat> hi, Rat level,
                            LinearLikeMap map) {
        SampleLeaf l;
        l.kind = Kind::Graph;
        l.lo = std::move(lo);
        l.hi = std::move(hi);
        l.level = std::move(level);
        l.map = std::move(map);
        return l;
    }
};

// Whether two descriptions name the same leaf of one foliation.
bool same_leaf(const SampleLeaf& a, const SampleLeaf& b);

// Mutual position of three pairwise disjoint leaves: either one of them
// splits the plane so the other two land in different components (Separation,
// with `middle` naming the splitting leaf by its argument position), or the
// triple is cyclic with an orientation (positive = counterclockwise).
// Inconclusive only reports an exhausted frame-growing budget; it is
// essentially never returned for well-formed leaves.
struct ChordalRelation {
    enum class Kind { Separation, CyclicPositive, CyclicNegative, Inconclusive };
    Kind kind = Kind::Inconclusive;
    int middle = 0;  // 1..3 when kind == Separation, otherwise 0

    static ChordalRelation separation(int middle) { return {Kind::Separation, middle}; }
    static ChordalRelation cyclic(Sign s) {
        return {s == Sign::Pos ? Kind::CyclicPositive : Kind::CyclicNegative, 0};
    }
    static ChordalRelation inconclusive() { return {Kind::Inconclusive, 0}; }

    friend bool operator==(const ChordalRelation&, const ChordalRelation&) = default;
};

std::string relation_name(const ChordalRelation& r);

// Raised when no frame size cuts every queried leaf in exactly two points.
struct DegenerateChoice : std::runtime_error {
    explicit DegenerateChoice(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a configuration carries irrational roots or boundary values;
// the sampling oracle only handles rational data.
struct OracleScope : std::runtime_error {
    explicit OracleScope(const std::string& what) : std::runtime_error(what) {}
};

// Leaves are located by intersecting them with a square frame [-R, R]^2 large
// enough that every queried leaf crosses its boundary in exactly two
// transversal points (R is doubled until that holds, which it always
// eventually does).  Inside such a frame each leaf is a single arc, so the
// order of the crossing points along the counterclockwise boundary cycle
// determines every separation and cyclic orientation exactly.

// True iff l2 splits the plane with l1 and l3 on opposite sides: the boundary
// points of l1 and of l3 fall in different arcs between the two boundary
// points of l2.  The schedule offsets are accepted for call-site
// compatibility; the answer never depends on them.
bool separates(const SampleLeaf& l1, const SampleLeaf& l2, const SampleLeaf& l3,
               unsigned schedule_offset_1 = 0, unsigned schedule_offset_3 = 0);

// Full relation of a pairwise distinct triple.  `budget` caps how many times
// the frame may be doubled before giving up with Inconclusive.
ChordalRelation classify_triple(const SampleLeaf& l1, const SampleLeaf& l2,
                                const SampleLeaf& l3, unsigned budget = 32);

struct TripleReport {
    std::array<std::string, 3> leaves;  // labels on the left side
    std::string relation_left;
    std::string relation_right;
};

struct CorrespondenceReport {
    int checked = 0;
    std::vector<TripleReport> violations;
    std::vector<TripleReport> inconclusive;
};

// Samples every separatrix and `samples_per_region` leaves per canonical
// region on both sides, pairs the samples through the transformation
// (vertical lines by index, separatrix curves by identity, ordinary leaves by
// region correspondence), and classifies every triple on both sides.  A
// triple is a violation when the relations disagree: orientation-preserving
// transformations must reproduce each relation, orientation-reversing ones
// must flip cyclic signs, and separations must match position for position.
// The transformation is taken as given, so a deliberately wrong pairing can
// be probed; it then shows up as violations rather than as an error.
CorrespondenceReport check_correspondence(const Configuration& left,
                                          const Configuration& right, Transformation t,
                                          int samples_per_region = 1, unsigned budget = 32);

struct ConformanceReport {
    int checked = 0;
    std::vector<std::string> violations;
    std::vector<std::string> inconclusive;
};

// Cross-checks the strip tokens against sampled geometry: at each finite
// strip end, the triple (vertical line, neighboring-region leaf, attached
// separatrix curve) must be cyclic with the sign recorded in the token (the
// opposite sign at right ends), and in strips whose two ends share a level,
// the triple (left vertical, separatrix curve, right vertical) must be cyclic
// of sign opposite the token when the token signs agree and separated by the
// curve when they differ.
ConformanceReport check_token_conformance(const Configuration& conf, unsigned budget = 32);

}  // namespace folia
