#include "folia/chordal.hpp"

#include <algorithm>
#include <utility>

#include "folia/poly.hpp"

namespace folia {

namespace {

// A crossing of one leaf with the boundary of the frame square [-R, R]^2,
// keyed by its position along the counterclockwise boundary cycle: east edge
// upward, north edge leftward, west edge downward, south edge rightward.
struct FramePoint {
    int edge = 0;  // 0 east, 1 north, 2 west, 3 south
    AlgReal pos;   // y on east/west edges, x on north/south edges
    size_t leaf = 0;
};

// Strict order along the counterclockwise traversal.  Two distinct leaves
// crossing the frame at one point would have to intersect there, so equality
// across leaves is a caller error.
bool frame_less(const FramePoint& a, const FramePoint& b) {
    if (a.edge != b.edge) return a.edge < b.edge;
    Cmp c = compare(a.pos, b.pos);
    if (c == Cmp::Equal) throw InternalError("two sampled leaves meet on the frame");
    bool ascending = a.edge == 0 || a.edge == 3;
    return ascending ? c == Cmp::Less : c == Cmp::Greater;
}

// The crossings of one leaf with the frame of half-width R, or nullopt when
// this R cuts the leaf in anything other than two transversal interior
// points (then the frame must grow).
std::optional<std::vector<FramePoint>> frame_crossings(const SampleLeaf& l, size_t index,
                                                       const Rat& R) {
    std::vector<FramePoint> pts;
    if (l.kind == SampleLeaf::Kind::Vertical) {
        if (!(-R < l.x && l.x < R)) return std::nullopt;
        pts.push_back({1, AlgReal::exact(l.x), index});
        pts.push_back({3, AlgReal::exact(l.x), index});
        return pts;
    }
    if (l.lo && !(-R < *l.lo)) return std::nullopt;
    if (l.hi && !(*l.hi < R)) return std::nullopt;
    // East/west edges are reachable only where the strip is unbounded.  A
    // graph crosses a vertical edge transversally or not at all.
    if (!l.hi) {
        Rat sR = l.map.s.eval(R);
        if (sR == 0) return std::nullopt;
        Rat y = (l.level - l.map.r.eval(R)) / sR;
        if (y == R || y == -R) return std::nullopt;  // corner hit
        if (-R < y && y < R) pts.push_back({0, AlgReal::exact(y), index});
    }
    if (!l.lo) {
        Rat sL = l.map.s.eval(-R);
        if (sL == 0) return std::nullopt;
        Rat y = (l.level - l.map.r.eval(-R)) / sL;
        if (y == R || y == -R) return std::nullopt;
        if (-R < y && y < R) pts.push_back({2, AlgReal::exact(y), index});
    }
    // North/south edges: solve r + s*(+-R) = level over the strip clipped to
    // the frame, excluding the open interval's endpoints.
    AlgReal xlo = AlgReal::exact(l.lo ? *l.lo : -R);
    AlgReal xhi = AlgReal::exact(l.hi ? *l.hi : R);
    for (int top = 0; top <= 1; ++top) {
        Rat edge_y = top ? R : -R;
        UniPoly edge_poly = l.map.r + edge_y * l.map.s - UniPoly::constant(l.level);
        if (edge_poly.is_zero()) return std::nullopt;  // leaf rides the edge itself
        for (const auto& ir : isolate_real_roots(edge_poly)) {
            if (!(compare(xlo, ir.root) == Cmp::Less && compare(ir.root, xhi) == Cmp::Less))
                continue;
            if (ir.multiplicity % 2 == 0) return std::nullopt;  // tangent to the edge
            pts.push_back({top ? 1 : 3, ir.root, index});
        }
    }
    if (pts.size() != 2) return std::nullopt;
    return pts;
}

// The two boundary-cycle ranks of every leaf, on a common frame grown until
// each leaf crosses it exactly twice.
std::vector<std::array<int, 2>> boundary_ranks(const std::vector<SampleLeaf>& leaves,
                                               unsigned doublings) {
    Rat R(4);
    auto widen = [&R](const Rat& v) {
        Rat w = v < 0 ? Rat(-v) : v;
        if (R < w + 2) R = w + 2;
    };
    for (const auto& l : leaves) {
        if (l.kind == SampleLeaf::Kind::Vertical) {
            widen(l.x);
        } else {
            if (l.lo) widen(*l.lo);
            if (l.hi) widen(*l.hi);
            widen(l.level);
        }
    }
    for (unsigned attempt = 0;; ++attempt) {
        std::vector<FramePoint> all;
        bool ok = true;
        for (size_t i = 0; i < leaves.size() && ok; ++i) {
            auto pts = frame_crossings(leaves[i], i, R);
            if (pts) all.insert(all.end(), pts->begin(), pts->end());
            else ok = false;
        }
        if (ok) {
            std::sort(all.begin(), all.end(), frame_less);
            std::vector<std::array<int, 2>> ranks(leaves.size(), {-1, -1});
            for (size_t pos = 0; pos < all.size(); ++pos) {
                auto& slot = ranks[all[pos].leaf];
                (slot[0] < 0 ? slot[0] : slot[1]) = static_cast<int>(pos);
            }
            return ranks;
        }
        if (attempt >= doublings)
            throw DegenerateChoice("no frame size cuts every leaf in two points");
        R = R * 2;
    }
}

// Whether rank x lies strictly inside the counterclockwise arc from -> to.
bool in_ccw_arc(int from, int to, int x) {
    if (from < to) return from < x && x < to;
    return x > from || x < to;
}

// 0 when both ends of `other` avoid the ccw arc chord[0] -> chord[1], 2 when
// both lie inside it.  A split (one in, one out) would mean crossing chords,
// i.e. intersecting leaves.
int arc_side(const std::array<int, 2>& chord, const std::array<int, 2>& other) {
    int inside = (in_ccw_arc(chord[0], chord[1], other[0]) ? 1 : 0) +
                 (in_ccw_arc(chord[0], chord[1], other[1]) ? 1 : 0);
    if (inside == 1) throw InternalError("sampled leaves are not disjoint");
    return inside;
}

ChordalRelation classify_ranks(const std::array<int, 2>& a, const std::array<int, 2>& b,
                               const std::array<int, 2>& c) {
    if (arc_side(b, a) != arc_side(b, c)) return ChordalRelation::separation(2);
    if (arc_side(a, b) != arc_side(a, c)) return ChordalRelation::separation(1);
    if (arc_side(c, a) != arc_side(c, b)) return ChordalRelation::separation(3);
    // No separation: the six ranks form three adjacent blocks around the
    // cycle.  The block order read counterclockwise is the cyclic order of
    // the triple.
    std::vector<std::pair<int, int>> seq;  // (rank, argument position)
    for (int r : a) seq.push_back({r, 1});
    for (int r : b) seq.push_back({r, 2});
    for (int r : c) seq.push_back({r, 3});
    std::sort(seq.begin(), seq.end());
    size_t start = seq[0].second == seq[1].second ? 0 : 1;
    int w0 = seq[start].second;
    int w1 = seq[(start + 2) % 6].second;
    int w2 = seq[(start + 4) % 6].second;
    if (seq[start].second != seq[(start + 1) % 6].second ||
        seq[(start + 2) % 6].second != seq[(start + 3) % 6].second ||
        w2 != seq[(start + 5) % 6].second || w0 == w1 || w1 == w2)
        throw InternalError("chord ends do not pair up");
    bool positive = (w0 == 1 && w1 == 2) || (w0 == 2 && w1 == 3) || (w0 == 3 && w1 == 1);
    return ChordalRelation::cyclic(positive ? Sign::Pos : Sign::Neg);
}

void require_distinct(const SampleLeaf& l1, const SampleLeaf& l2, const SampleLeaf& l3,
                      const char* who) {
    if (same_leaf(l1, l2) || same_leaf(l2, l3) || same_leaf(l1, l3))
        throw PreconditionViolated(std::string(who) + " requires pairwise distinct leaves");
}

}  // namespace

bool same_leaf(const SampleLeaf& a, const SampleLeaf& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == SampleLeaf::Kind::Vertical) return a.x == b.x;
    return a.lo == b.lo && a.hi == b.hi && a.level == b.level;
}

std::string relation_name(const ChordalRelation& r) {
    switch (r.kind) {
        case ChordalRelation::Kind::Separation:
            return "separation-" + std::to_string(r.middle);
        case ChordalRelation::Kind::CyclicPositive:
            return "cyclic-positive";
        case ChordalRelation::Kind::CyclicNegative:
            return "cyclic-negative";
        case ChordalRelation::Kind::Inconclusive:
            return "inconclusive";
    }
    throw InternalError("unknown chordal relation");
}

bool separates(const SampleLeaf& l1, const SampleLeaf& l2, const SampleLeaf& l3,
               unsigned schedule_offset_1, unsigned schedule_offset_3) {
    (void)schedule_offset_1;
    (void)schedule_offset_3;
    require_distinct(l1, l2, l3, "separates");
    auto ranks = boundary_ranks({l1, l2, l3}, 32);
    return arc_side(ranks[1], ranks[0]) != arc_side(ranks[1], ranks[2]);
}

ChordalRelation classify_triple(const SampleLeaf& l1, const SampleLeaf& l2,
                                const SampleLeaf& l3, unsigned budget) {
    require_distinct(l1, l2, l3, "classify_triple");
    try {
        auto ranks = boundary_ranks({l1, l2, l3}, budget);
        return classify_ranks(ranks[0], ranks[1], ranks[2]);
    } catch (const DegenerateChoice&) {
        return ChordalRelation::inconclusive();
    }
}

namespace {

void require_rational_data(const Configuration& c) {
    for (const auto& z : c.roots)
        if (!z.is_exact()) throw OracleScope("configuration has an irrational zero of s");
    for (const auto& v : c.boundary_values)
        if (!v.is_exact())
            throw OracleScope("configuration has an irrational vertical-line value");
}

std::pair<std::optional<Rat>, std::optional<Rat>> strip_bounds(const Configuration& c,
                                                               int strip) {
    std::pair<std::optional<Rat>, std::optional<Rat>> b;
    if (strip > 0) b.first = c.roots[static_cast<size_t>(strip - 1)].value();
    if (strip < c.root_count()) b.second = c.roots[static_cast<size_t>(strip)].value();
    return b;
}

SampleLeaf inner_leaf(const Configuration& c, int strip, const Rat& level) {
    auto [lo, hi] = strip_bounds(c, strip);
    return SampleLeaf::graph(lo, hi, level, c.map);
}

// The n-th of `total` sample levels strictly inside the region's level range.
Rat sample_level(const CanonicalRegion& reg, int n, int total) {
    bool lb = reg.lower.kind == LevelBound::Kind::Finite;
    bool ub = reg.upper.kind == LevelBound::Kind::Finite;
    if (lb && ub) {
        Rat lo = reg.lower.value->value();
        Rat hi = reg.upper.value->value();
        return lo + (hi - lo) * Rat(n + 1) / Rat(total + 1);
    }
    if (ub) return reg.upper.value->value() - Rat(n + 1);
    if (lb) return reg.lower.value->value() + Rat(n + 1);
    return Rat(n);
}

SampleLeaf region_leaf(const Configuration& c, const CanonicalRegion& reg, int n, int total) {
    auto [lo, hi] = strip_bounds(c, reg.strip);
    return SampleLeaf::graph(lo, hi, sample_level(reg, n, total), c.map);
}

std::string attach_suffix(SeparatrixId::Attach a) {
    switch (a) {
        case SeparatrixId::Attach::Left: return "a";
        case SeparatrixId::Attach::Right: return "b";
        case SeparatrixId::Attach::Both: return "ab";
    }
    throw InternalError("unknown attach kind");
}

ChordalRelation flip_cyclic(ChordalRelation r) {
    if (r.kind == ChordalRelation::Kind::CyclicPositive)
        r.kind = ChordalRelation::Kind::CyclicNegative;
    else if (r.kind == ChordalRelation::Kind::CyclicNegative)
        r.kind = ChordalRelation::Kind::CyclicPositive;
    return r;
}

std::vector<SeparatrixId> sorted_ids(std::vector<SeparatrixId> ids) {
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

CorrespondenceReport check_correspondence(const Configuration& left,
                                          const Configuration& right, Transformation t,
                                          int samples_per_region, unsigned budget) {
    require_rational_data(left);
    require_rational_data(right);
    const int k = left.root_count();
    if (right.root_count() != k)
        throw PreconditionViolated("correspondence requires equal numbers of vertical lines");
    const bool rev = t == Transformation::HFlip || t == Transformation::Rotation;

    std::vector<std::string> labels;
    std::vector<SampleLeaf> lhs, rhs;

    for (int j = 0; j < k; ++j) {
        labels.push_back("v" + std::to_string(j));
        lhs.push_back(SampleLeaf::vertical(left.roots[static_cast<size_t>(j)].value()));
        int jq = rev ? k - 1 - j : j;
        rhs.push_back(SampleLeaf::vertical(right.roots[static_cast<size_t>(jq)].value()));
    }

    auto sep_right = separatrices(right);
    for (const auto& si : separatrices(left)) {
        if (si.id.kind != SeparatrixId::Kind::Inner) continue;
        labels.push_back("s" + std::to_string(si.id.index) + attach_suffix(si.id.attach));
        lhs.push_back(inner_leaf(left, si.id.index, si.level.value()));
        SeparatrixId tid = transform_separatrix(si.id, t, k);
        auto it = std::find_if(sep_right.begin(), sep_right.end(),
                               [&](const SeparatrixInfo& other) { return other.id == tid; });
        if (it == sep_right.end())
            throw PreconditionViolated("separatrix correspondence failed");
        rhs.push_back(inner_leaf(right, tid.index, it->level.value()));
    }

    // Regions grouped per strip, in stored (ascending-level) order.
    std::vector<std::vector<const CanonicalRegion*>> by_strip_l(static_cast<size_t>(k + 1));
    std::vector<std::vector<const CanonicalRegion*>> by_strip_r(static_cast<size_t>(k + 1));
    for (const auto& reg : left.regions)
        by_strip_l[static_cast<size_t>(reg.strip)].push_back(&reg);
    for (const auto& reg : right.regions)
        by_strip_r[static_cast<size_t>(reg.strip)].push_back(&reg);

    for (int s = 0; s <= k; ++s) {
        const auto& group = by_strip_l[static_cast<size_t>(s)];
        int s2 = transform_strip(s, t, k);
        const auto& group_r = by_strip_r[static_cast<size_t>(s2)];
        if (group.size() != group_r.size())
            throw PreconditionViolated("region correspondence failed");
        for (size_t pos = 0; pos < group.size(); ++pos) {
            const CanonicalRegion& reg = *group[pos];
            std::vector<SeparatrixId> want;
            for (const auto& id : reg.boundary) want.push_back(transform_separatrix(id, t, k));
            want = sorted_ids(want);
            const CanonicalRegion* match = nullptr;
            for (const CanonicalRegion* cand : group_r)
                if (sorted_ids(cand->boundary) == want) {
                    match = cand;
                    break;
                }
            // A wrong pairing can leave no identity-matched region; fall back
            // to matching by position in level order so it can still be probed.
            if (!match) match = group_r[pos];
            for (int n = 0; n < samples_per_region; ++n) {
                std::string label = "g" + std::to_string(s) + "." + std::to_string(pos);
                if (samples_per_region > 1) label += "." + std::to_string(n);
                labels.push_back(label);
                lhs.push_back(region_leaf(left, reg, n, samples_per_region));
                rhs.push_back(region_leaf(right, *match, n, samples_per_region));
            }
        }
    }

    CorrespondenceReport rep;
    if (lhs.size() < 3) return rep;
    auto lranks = boundary_ranks(lhs, budget);
    auto rranks = boundary_ranks(rhs, budget);
    const size_t n = lhs.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (size_t m = j + 1; m < n; ++m) {
                ChordalRelation rl = classify_ranks(lranks[i], lranks[j], lranks[m]);
                ChordalRelation rr = classify_ranks(rranks[i], rranks[j], rranks[m]);
                ++rep.checked;
                ChordalRelation expect = orientation_preserving(t) ? rl : flip_cyclic(rl);
                if (!(rr == expect))
                    rep.violations.push_back(TripleReport{{labels[i], labels[j], labels[m]},
                                                          relation_name(rl),
                                                          relation_name(rr)});
            }
        }
    }
    return rep;
}

namespace {

const CanonicalRegion& region_with_vertical(const Configuration& c, int strip,
                                            int root_index) {
    for (const auto& reg : c.regions) {
        if (reg.strip != strip) continue;
        for (const auto& id : reg.boundary)
            if (id.kind == SeparatrixId::Kind::Vertical && id.index == root_index) return reg;
    }
    throw InternalError("no canonical region is attached to the vertical line");
}

const SeparatrixInfo& inner_at(const std::vector<SeparatrixInfo>& seps, int strip,
                               bool left_side) {
    for (const auto& si : seps) {
        if (si.id.kind != SeparatrixId::Kind::Inner || si.id.index != strip) continue;
        if (si.id.attach == SeparatrixId::Attach::Both) return si;
        if (si.id.attach ==
            (left_side ? SeparatrixId::Attach::Left : SeparatrixId::Attach::Right))
            return si;
    }
    throw InternalError("missing separatrix curve for the strip end");
}

}  // namespace

ConformanceReport check_token_conformance(const Configuration& conf, unsigned budget) {
    require_rational_data(conf);
    ConformanceReport rep;
    const int k = conf.root_count();
    auto seps = separatrices(conf);

    auto run_check = [&](const std::string& what, const SampleLeaf& a, const SampleLeaf& b,
                         const SampleLeaf& c, const ChordalRelation& expected) {
        ChordalRelation got = classify_triple(a, b, c, budget);
        if (got.kind == ChordalRelation::Kind::Inconclusive) {
            rep.inconclusive.push_back(what + ": frame budget exhausted, expected " +
                                       relation_name(expected));
            return;
        }
        ++rep.checked;
        if (!(got == expected))
            rep.violations.push_back(what + ": expected " + relation_name(expected) +
                                     ", got " + relation_name(got));
    };

    for (int i = 0; i <= k; ++i) {
        if (k == 0) break;
        const StripToken& tok = conf.tokens[static_cast<size_t>(i)];
        bool has_left = i >= 1;
        bool has_right = i <= k - 1;
        if (has_left) {
            int root = i - 1;
            Sign own = tok.signs[0];  // first entry is the left-end sign for all kinds
            SampleLeaf nu = SampleLeaf::vertical(conf.roots[static_cast<size_t>(root)].value());
            const SeparatrixInfo& gc = inner_at(seps, i, true);
            SampleLeaf gamma_c = inner_leaf(conf, i, gc.level.value());
            SampleLeaf gamma = region_leaf(conf, region_with_vertical(conf, i, root), 0, 1);
            run_check("strip " + std::to_string(i) + ", left end", nu, gamma, gamma_c,
                      ChordalRelation::cyclic(own));
        }
        if (has_right) {
            int root = i;
            Sign own = tok.signs[tok.signs.size() - 1];  // last entry is the right-end sign
            SampleLeaf nu = SampleLeaf::vertical(conf.roots[static_cast<size_t>(root)].value());
            const SeparatrixInfo& gc = inner_at(seps, i, false);
            SampleLeaf gamma_c = inner_leaf(conf, i, gc.level.value());
            SampleLeaf gamma = region_leaf(conf, region_with_vertical(conf, i, root), 0, 1);
            run_check("strip " + std::to_string(i) + ", right end", nu, gamma, gamma_c,
                      ChordalRelation::cyclic(-own));
        }
        if (tok.kind == StripToken::Kind::BoundedEqual) {
            Sign sa = tok.signs[0];
            Sign sb = tok.signs[1];
            SampleLeaf nu_a = SampleLeaf::vertical(conf.roots[static_cast<size_t>(i - 1)].value());
            SampleLeaf nu_b = SampleLeaf::vertical(conf.roots[static_cast<size_t>(i)].value());
            const SeparatrixInfo& gc = inner_at(seps, i, true);
            SampleLeaf gamma_c = inner_leaf(conf, i, gc.level.value());
            ChordalRelation expected = sa == sb ? ChordalRelation::cyclic(-sa)
                                                : ChordalRelation::separation(2);
            run_check("strip " + std::to_string(i) + ", both ends", nu_a, gamma_c, nu_b,
                      expected);
        }
    }
    return rep;
}

}  // namespace folia
