#include "folia/foliation.hpp"

#include <algorithm>

namespace folia {

namespace {

using Attach = SeparatrixId::Attach;

Sign require_sign(Sign s) {
    if (s == Sign::Zero) throw InternalError("sign unexpectedly zero in token computation");
    return s;
}

// Sign of the numerator c - r(x) as x approaches a zero of s from one side.
// When c is the value attained at that very boundary the numerator vanishes
// there and the first-order expansion through r' decides; otherwise the
// numerator is nonzero at the boundary and a direct sign query suffices.
Sign numerator_boundary_sign(const UniPoly& r, const AlgReal& level, bool own_value,
                             Sign rprime, const AlgReal& root, const AlgReal& boundary_value,
                             Side side) {
    if (own_value) return side == Side::Right ? -rprime : rprime;
    if (level.is_exact())
        return side_sign(UniPoly::constant(level.value()) - r, root, side);
    return compare(level, boundary_value) == Cmp::Greater ? Sign::Pos : Sign::Neg;
}

struct Skeleton {
    std::vector<AlgReal> roots;
    std::vector<AlgReal> boundary_values;
    std::vector<Sign> rprime_signs;
};

Skeleton make_skeleton(const LinearLikeMap& m) {
    if (auto failure = validate_submersion(m)) throw SubmersionError(*failure);
    Skeleton sk;
    for (const IsolatedRoot& ir : isolate_real_roots(m.s)) {
        sk.roots.push_back(ir.root);
        sk.boundary_values.push_back(image_value(m.r, ir.root));
        sk.rprime_signs.push_back(sign_at(m.r.derivative(), ir.root));
    }
    return sk;
}

std::vector<Sign> make_strip_signs(const UniPoly& s, const std::vector<AlgReal>& roots) {
    std::vector<Sign> ss;
    if (roots.empty()) {
        ss.push_back(sign_of(sgn(s.eval(Rat(0)))));
        return ss;
    }
    ss.push_back(require_sign(side_sign(s, roots.front(), Side::Left)));
    for (size_t i = 0; i < roots.size(); ++i)
        ss.push_back(require_sign(side_sign(s, roots[i], Side::Right)));
    return ss;
}

std::vector<StripToken> make_tokens(const UniPoly& r, const Skeleton& sk,
                                    const std::vector<Sign>& ss) {
    const auto& roots = sk.roots;
    const auto& bv = sk.boundary_values;
    const auto& rp = sk.rprime_signs;
    int k = static_cast<int>(roots.size());
    std::vector<StripToken> tokens;
    if (k == 0) return tokens;
    tokens.push_back(StripToken::left_infinite(require_sign(rp[0] * ss[0])));
    for (int i = 1; i < k; ++i) {
        size_t ia = static_cast<size_t>(i - 1), ib = static_cast<size_t>(i);
        Sign sstrip = ss[static_cast<size_t>(i)];
        if (compare(bv[ia], bv[ib]) == Cmp::Equal) {
            tokens.push_back(StripToken::bounded_equal(require_sign(-rp[ia] * sstrip),
                                                       require_sign(rp[ib] * sstrip)));
            continue;
        }
        Sign aa = require_sign(
            numerator_boundary_sign(r, bv[ia], true, rp[ia], roots[ia], bv[ia], Side::Right) * sstrip);
        Sign ab = require_sign(
            numerator_boundary_sign(r, bv[ia], false, rp[ib], roots[ib], bv[ib], Side::Left) * sstrip);
        Sign ba = require_sign(
            numerator_boundary_sign(r, bv[ib], false, rp[ia], roots[ia], bv[ia], Side::Right) * sstrip);
        Sign bb = require_sign(
            numerator_boundary_sign(r, bv[ib], true, rp[ib], roots[ib], bv[ib], Side::Left) * sstrip);
        if (ab != -ba)
            throw InternalError("strip token violates the opposite-crossing constraint");
        tokens.push_back(StripToken::bounded_distinct(aa, ab, ba, bb));
    }
    tokens.push_back(StripToken::right_infinite(require_sign(-rp[static_cast<size_t>(k - 1)] *
                                                             ss[static_cast<size_t>(k)])));
    return tokens;
}

// The distinguished curves of strip i together with the level each lies on.
std::vector<std::pair<SeparatrixId, AlgReal>> strip_inners(const Skeleton& sk,
                                                           const std::vector<StripToken>& tokens,
                                                           int i) {
    const auto& bv = sk.boundary_values;
    int k = static_cast<int>(sk.roots.size());
    std::vector<std::pair<SeparatrixId, AlgReal>> out;
    if (k == 0) return out;
    if (i == 0) {
        out.emplace_back(SeparatrixId::inner(0, Attach::Right), bv.front());
    } else if (i == k) {
        out.emplace_back(SeparatrixId::inner(k, Attach::Left), bv.back());
    } else if (tokens[static_cast<size_t>(i)].kind == StripToken::Kind::BoundedEqual) {
        out.emplace_back(SeparatrixId::inner(i, Attach::Both), bv[static_cast<size_t>(i - 1)]);
    } else {
        out.emplace_back(SeparatrixId::inner(i, Attach::Left), bv[static_cast<size_t>(i - 1)]);
        out.emplace_back(SeparatrixId::inner(i, Attach::Right), bv[static_cast<size_t>(i)]);
    }
    return out;
}

bool bound_equals(const LevelBound& b, const AlgReal& v) {
    return b.kind == LevelBound::Kind::Finite && compare(*b.value, v) == Cmp::Equal;
}

std::vector<CanonicalRegion> make_regions(const Skeleton& sk,
                                          const std::vector<StripToken>& tokens) {
    const auto& bv = sk.boundary_values;
    const auto& rp = sk.rprime_signs;
    int k = static_cast<int>(sk.roots.size());
    std::vector<CanonicalRegion> regions;
    if (k == 0) {
        regions.push_back({0, LevelBound::neg_inf(), LevelBound::pos_inf(), {}});
        return regions;
    }
    for (int i = 0; i <= k; ++i) {
        // distinct boundary values of this strip, ascending
        std::vector<AlgReal> levels;
        if (i == 0) {
            levels = {bv.front()};
        } else if (i == k) {
            levels = {bv.back()};
        } else {
            const AlgReal& ca = bv[static_cast<size_t>(i - 1)];
            const AlgReal& cb = bv[static_cast<size_t>(i)];
            switch (compare(ca, cb)) {
                case Cmp::Equal: levels = {ca}; break;
                case Cmp::Less: levels = {ca, cb}; break;
                case Cmp::Greater: levels = {cb, ca}; break;
            }
        }
        auto inners = strip_inners(sk, tokens, i);
        int m = static_cast<int>(levels.size());
        for (int t = 0; t <= m; ++t) {
            CanonicalRegion reg;
            reg.strip = i;
            reg.lower = t == 0 ? LevelBound::neg_inf() : LevelBound::finite(levels[static_cast<size_t>(t - 1)]);
            reg.upper = t == m ? LevelBound::pos_inf() : LevelBound::finite(levels[static_cast<size_t>(t)]);
            for (const auto& [id, level] : inners)
                if (bound_equals(reg.lower, level) || bound_equals(reg.upper, level))
                    reg.boundary.push_back(id);
            if (i >= 1) {
                // The vertical at the left boundary a is approached by the
                // region on side sign(r'(a)) of c_a.
                const AlgReal& ca = bv[static_cast<size_t>(i - 1)];
                bool here = rp[static_cast<size_t>(i - 1)] == Sign::Pos ? bound_equals(reg.lower, ca)
                                                                        : bound_equals(reg.upper, ca);
                if (here) reg.boundary.push_back(SeparatrixId::vertical(i - 1));
            }
            if (i <= k - 1) {
                // At the right boundary b the adjacent region sits on side
                // -sign(r'(b)) of c_b.
                const AlgReal& cb = bv[static_cast<size_t>(i)];
                bool here = rp[static_cast<size_t>(i)] == Sign::Neg ? bound_equals(reg.lower, cb)
                                                                    : bound_equals(reg.upper, cb);
                if (here) reg.boundary.push_back(SeparatrixId::vertical(i));
            }
            std::sort(reg.boundary.begin(), reg.boundary.end());
            regions.push_back(std::move(reg));
        }
    }
    return regions;
}

std::vector<AlgReal> sorted_distinct(std::vector<AlgReal> vals) {
    std::sort(vals.begin(), vals.end(),
              [](const AlgReal& x, const AlgReal& y) { return compare(x, y) == Cmp::Less; });
    std::vector<AlgReal> out;
    for (const AlgReal& v : vals)
        if (out.empty() || compare(out.back(), v) != Cmp::Equal) out.push_back(v);
    return out;
}

}  // namespace

std::string SubmersionFailure::message() const {
    switch (kind) {
        case Kind::SimpleZero:
            return "s has a simple zero near x = " + to_float(*root, 6) +
                   "; every zero of s must have multiplicity at least 2";
        case Kind::CriticalValueOnFiber:
            return "r' vanishes at the zero of s near x = " + to_float(*root, 6) +
                   "; the map has a critical point there";
        case Kind::OutOfScope:
            return "s is identically zero; the zero set of s must be finite";
    }
    return "invalid map";
}

std::optional<SubmersionFailure> validate_submersion(const LinearLikeMap& m) {
    if (m.s.is_zero())
        return SubmersionFailure{SubmersionFailure::Kind::OutOfScope, std::nullopt};
    UniPoly rprime = m.r.derivative();
    for (const IsolatedRoot& ir : isolate_real_roots(m.s)) {
        if (ir.multiplicity < 2)
            return SubmersionFailure{SubmersionFailure::Kind::SimpleZero, ir.root};
        if (sign_at(rprime, ir.root) == Sign::Zero)
            return SubmersionFailure{SubmersionFailure::Kind::CriticalValueOnFiber, ir.root};
    }
    return std::nullopt;
}

std::vector<Strip> strips(const Configuration& conf) {
    std::vector<Strip> out;
    int k = conf.root_count();
    for (int i = 0; i <= k; ++i) {
        Strip st;
        st.index = i;
        st.left = i == 0 ? Boundary{Boundary::Kind::MinusInfinity, -1}
                         : Boundary{Boundary::Kind::Root, i - 1};
        st.right = i == k ? Boundary{Boundary::Kind::PlusInfinity, -1}
                          : Boundary{Boundary::Kind::Root, i};
        out.push_back(st);
    }
    return out;
}

Configuration build_configuration(const LinearLikeMap& m) {
    Skeleton sk = make_skeleton(m);
    Configuration conf;
    conf.map = m;
    conf.roots = sk.roots;
    conf.boundary_values = sk.boundary_values;
    conf.rprime_signs = sk.rprime_signs;
    conf.strip_s_signs = make_strip_signs(m.s, sk.roots);
    conf.tokens = make_tokens(m.r, sk, conf.strip_s_signs);
    conf.regions = make_regions(sk, conf.tokens);
    conf.bifurcation = sorted_distinct(sk.boundary_values);
    return conf;
}

std::vector<AlgReal> bifurcation_set(const LinearLikeMap& m) {
    Skeleton sk = make_skeleton(m);
    return sorted_distinct(sk.boundary_values);
}

int fiber_component_count(const LinearLikeMap& m, const AlgReal& c) {
    Skeleton sk = make_skeleton(m);
    int count = static_cast<int>(sk.roots.size()) + 1;
    for (const AlgReal& v : sk.boundary_values)
        if (compare(v, c) == Cmp::Equal) ++count;
    return count;
}

std::vector<SeparatrixInfo> separatrices(const Configuration& conf) {
    std::vector<SeparatrixInfo> out;
    int k = conf.root_count();
    if (k == 0) return out;
    for (int j = 0; j < k; ++j)
        out.push_back({SeparatrixId::vertical(j), conf.boundary_values[static_cast<size_t>(j)]});
    Skeleton sk{conf.roots, conf.boundary_values, conf.rprime_signs};
    for (int i = 0; i <= k; ++i)
        for (const auto& [id, level] : strip_inners(sk, conf.tokens, i))
            out.push_back({id, level});
    return out;
}

std::optional<std::vector<StripToken>> tokens_via_side_signs(const LinearLikeMap& m) {
    Skeleton sk = make_skeleton(m);
    const auto& roots = sk.roots;
    const auto& bv = sk.boundary_values;
    int k = static_cast<int>(roots.size());
    for (const AlgReal& v : bv)
        if (!v.is_exact()) return std::nullopt;
    std::vector<Sign> ss = make_strip_signs(m.s, roots);
    auto sigma = [&](const AlgReal& level, size_t root_idx, Side side, size_t strip) {
        UniPoly numer = UniPoly::constant(level.value()) - m.r;
        return require_sign(side_sign(numer, roots[root_idx], side) * ss[strip]);
    };
    std::vector<StripToken> tokens;
    if (k == 0) return tokens;
    tokens.push_back(StripToken::left_infinite(sigma(bv[0], 0, Side::Left, 0)));
    for (int i = 1; i < k; ++i) {
        size_t ia = static_cast<size_t>(i - 1), ib = static_cast<size_t>(i), si = static_cast<size_t>(i);
        if (bv[ia].value() == bv[ib].value()) {
            tokens.push_back(StripToken::bounded_equal(sigma(bv[ia], ia, Side::Right, si),
                                                       sigma(bv[ia], ib, Side::Left, si)));
        } else {
            tokens.push_back(StripToken::bounded_distinct(sigma(bv[ia], ia, Side::Right, si),
                                                          sigma(bv[ia], ib, Side::Left, si),
                                                          sigma(bv[ib], ia, Side::Right, si),
                                                          sigma(bv[ib], ib, Side::Left, si)));
        }
    }
    tokens.push_back(StripToken::right_infinite(sigma(bv[static_cast<size_t>(k - 1)],
                                                      static_cast<size_t>(k - 1), Side::Right,
                                                      static_cast<size_t>(k))));
    return tokens;
}

}  // namespace folia
