#include "folia/algreal.hpp"

#include <algorithm>
#include <map>

namespace folia {

AlgReal AlgReal::exact(Rat q) {
    AlgReal z;
    z.exact_ = true;
    z.value_ = std::move(q);
    return z;
}

AlgReal AlgReal::isolated(UniPoly defining, Rat lo, Rat hi) {
    if (defining.degree() < 1) throw InternalError("isolated value needs nonconstant defining polynomial");
    if (gcd_monic(defining, defining.derivative()).degree() > 0)
        throw InternalError("defining polynomial must be squarefree");
    if (!(lo < hi) || sgn(defining.eval(lo)) * sgn(defining.eval(hi)) >= 0)
        throw InternalError("isolating interval needs a sign change");
    if (SturmChain(defining).count_roots(lo, hi) != 1)
        throw InternalError("isolating interval must contain exactly one root");
    AlgReal z;
    z.exact_ = false;
    z.defn_ = scale_primitive(std::move(defining));
    z.lo_ = std::move(lo);
    z.hi_ = std::move(hi);
    return z;
}

const Rat& AlgReal::value() const {
    if (!exact_) throw InternalError("value() on non-exact algebraic number");
    return value_;
}

const UniPoly& AlgReal::defining() const {
    if (exact_) throw InternalError("defining() on exact rational");
    return defn_;
}

void AlgReal::refine() {
    if (exact_) return;
    Rat m = (lo_ + hi_) / 2;
    int sm = sgn(defn_.eval(m));
    if (sm == 0) {
        exact_ = true;
        value_ = m;
        defn_ = UniPoly();
        return;
    }
    if (sgn(defn_.eval(lo_)) * sm < 0)
        hi_ = m;
    else
        lo_ = m;
}

void AlgReal::refine_below(const Rat& width) {
    while (!exact_ && hi_ - lo_ >= width) refine();
}

void AlgReal::shrink_endpoint(Side side, const UniPoly& avoid) {
    if (exact_) return;
    // Replace the chosen endpoint by an interior point that keeps the root
    // inside and is not a zero of `avoid`. Candidates creep toward the
    // endpoint, so one eventually lands between the root and the endpoint.
    int s_lo = sgn(defn_.eval(lo_));
    int s_hi = sgn(defn_.eval(hi_));
    for (Int denom = 2;; denom *= 2) {
        Rat step = (hi_ - lo_) / Rat(denom);
        Rat u = side == Side::Right ? Rat(hi_ - step) : Rat(lo_ + step);
        int su = sgn(defn_.eval(u));
        if (su == 0) {
            exact_ = true;
            value_ = u;
            defn_ = UniPoly();
            return;
        }
        if (!avoid.is_zero() && avoid.eval(u) == 0) continue;
        if (side == Side::Right) {
            if (su * s_lo < 0) { hi_ = u; return; }  // root in (lo, u)
            lo_ = u;                                  // root in (u, hi): creep closer
            s_lo = su;
        } else {
            if (su * s_hi < 0) { lo_ = u; return; }  // root in (u, hi)
            hi_ = u;
            s_hi = su;
        }
    }
}

namespace {

int root_count_between(const SturmChain& chain, const Rat& a, const Rat& b) {
    return chain.count_roots(a, b);
}

// Refine z until the open interval contains exactly `inside` roots of sf
// (0 when z is not a root of p, 1 when it is) and neither endpoint is a root
// of sf. Returns false if z collapsed to an exact rational on the way.
bool refine_to_clean_interval(AlgReal& z, const UniPoly& sf, const SturmChain& chain, int inside) {
    while (!z.is_exact()) {
        bool clean_lo = sf.eval(z.lo()) != 0;
        bool clean_hi = sf.eval(z.hi()) != 0;
        if (!clean_lo) z.shrink_endpoint(Side::Left, sf);
        if (!z.is_exact() && !clean_hi) z.shrink_endpoint(Side::Right, sf);
        if (z.is_exact()) return false;
        if (sf.eval(z.lo()) != 0 && sf.eval(z.hi()) != 0 &&
            root_count_between(chain, z.lo(), z.hi()) == inside)
            return true;
        z.refine();
    }
    return false;
}

}  // namespace

Cmp compare(const AlgReal& a, const AlgReal& b) {
    if (a.is_exact() && b.is_exact()) {
        int s = sgn(Rat(a.value() - b.value()));
        return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal);
    }
    if (a.is_exact()) {
        Cmp flipped = compare(b, a);
        return flipped == Cmp::Less ? Cmp::Greater : (flipped == Cmp::Greater ? Cmp::Less : Cmp::Equal);
    }
    if (b.is_exact()) {
        const Rat& q = b.value();
        if (q <= a.lo()) return Cmp::Greater;  // a > lo >= q
        if (q >= a.hi()) return Cmp::Less;
        int sq = sgn(a.defining().eval(q));
        if (sq == 0) return Cmp::Equal;
        // root lies in whichever half has the sign change
        if (sgn(a.defining().eval(a.lo())) * sq < 0) return Cmp::Less;  // root in (lo, q)
        return Cmp::Greater;
    }
    AlgReal x = a, y = b;
    UniPoly g = gcd_monic(x.defining(), y.defining());
    SturmChain* gchain = nullptr;
    SturmChain gchain_store{UniPoly::constant(1)};
    if (g.degree() >= 1) {
        gchain_store = SturmChain(g);
        gchain = &gchain_store;
    }
    for (;;) {
        if (x.is_exact() || y.is_exact()) return compare(x, y);
        if (x.hi() <= y.lo()) return Cmp::Less;
        if (y.hi() <= x.lo()) return Cmp::Greater;
        if (gchain) {
            Rat l = std::max(x.lo(), y.lo());
            Rat h = std::min(x.hi(), y.hi());
            if (l < h && gchain->count_roots(l, h) >= 1) return Cmp::Equal;
        }
        x.refine();
        y.refine();
    }
}

Sign sign_at(const UniPoly& p, const AlgReal& z) {
    if (p.is_zero()) return Sign::Zero;
    if (z.is_exact()) return sign_of(sgn(p.eval(z.value())));
    UniPoly sf = scale_primitive(squarefree_part(p));
    UniPoly g = gcd_monic(sf, z.defining());
    if (g.degree() >= 1 && SturmChain(g).count_roots(z.lo(), z.hi()) == 1) return Sign::Zero;
    AlgReal zz = z;
    SturmChain chain(sf);
    if (!refine_to_clean_interval(zz, sf, chain, 0))
        return sign_at(p, zz);  // collapsed to exact
    return sign_of(sgn(p.eval(zz.midpoint())));
}

Sign side_sign(const UniPoly& p, const AlgReal& z, Side side) {
    if (p.is_zero()) throw InternalError("side_sign of the zero polynomial");
    UniPoly sf = scale_primitive(squarefree_part(p));
    SturmChain chain(sf);
    if (z.is_exact()) {
        const Rat& q = z.value();
        UniPoly base = sf;
        if (base.eval(q) == 0) base = exact_div(base, UniPoly({-q, Rat(1)}));
        SturmChain base_chain(base);
        Rat step = 1;
        for (;;) {
            Rat u = side == Side::Right ? Rat(q + step) : Rat(q - step);
            if (base.eval(u) != 0 && base.eval(q) != 0) {
                int k = side == Side::Right ? base_chain.count_roots(q, u)
                                            : base_chain.count_roots(u, q);
                if (k == 0) return sign_of(sgn(p.eval(u)));
            }
            step /= 2;
        }
    }
    bool at_root = sign_at(p, z) == Sign::Zero;
    AlgReal zz = z;
    if (!refine_to_clean_interval(zz, sf, chain, at_root ? 1 : 0))
        return side_sign(p, zz, side);  // collapsed to exact
    return sign_of(sgn(p.eval(side == Side::Right ? zz.hi() : zz.lo())));
}

namespace {

// Divisors of |n|, via trial division with a budget. The leftover cofactor is
// kept as one extra (possibly composite) divisor, so the list may be
// incomplete for huge inputs but never wrong.
std::vector<Int> divisors_of(Int n, size_t cap = 4096) {
    if (n < 0) n = -n;
    std::vector<Int> divs{1};
    if (n <= 1) return divs;
    std::map<Int, int> fac;
    Int m = n;
    for (Int p = 2; p * p <= m && p < 100000; p == 2 ? p = 3 : p += 2) {
        while (m % p == 0) {
            ++fac[p];
            m /= p;
        }
    }
    if (m > 1) ++fac[m];
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) {
                divs.push_back(divs[j] * pk);
                if (divs.size() > cap) return divs;
            }
        }
    }
    return divs;
}

// Rational roots of a primitive integer polynomial (may be incomplete when
// the divisor budget is exceeded; see divisors_of).
std::vector<Rat> rational_roots(const UniPoly& f) {
    std::vector<Rat> roots;
    UniPoly g = f;
    while (!g.is_zero() && g.coeff(0) == 0) {
        roots.push_back(Rat(0));
        g = exact_div(g, UniPoly::x());
    }
    if (g.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        return roots;
    }
    for (const Int& pn : divisors_of(num(g.coeff(0)))) {
        for (const Int& qd : divisors_of(num(g.leading()))) {
            Rat cand(pn, qd);
            if (g.eval(cand) == 0) roots.push_back(cand);
            if (g.eval(-cand) == 0) roots.push_back(-cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

void isolate_squarefree(const UniPoly& f, int multiplicity, std::vector<IsolatedRoot>& out) {
    if (f.degree() < 1) return;
    UniPoly g = scale_primitive(f);
    for (const Rat& q : rational_roots(g)) {
        out.push_back({AlgReal::exact(q), multiplicity});
        g = exact_div(g, UniPoly({-q, Rat(1)}));
    }
    if (g.degree() < 1) return;
    SturmChain chain(g);
    Rat bound = root_bound(g);
    struct Segment { Rat lo, hi; int count; };
    std::vector<Segment> work;
    int total = chain.count_roots(-bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Segment seg = work.back();
        work.pop_back();
        if (seg.count == 1) {
            out.push_back({AlgReal::isolated(g, seg.lo, seg.hi), multiplicity});
            continue;
        }
        // split at a non-root interior point
        Rat m = (seg.lo + seg.hi) / 2;
        for (int k = 3; g.eval(m) == 0; k += 2) m = seg.lo + (seg.hi - seg.lo) / k;
        int left = chain.count_roots(seg.lo, m);
        if (left > 0) work.push_back({seg.lo, m, left});
        if (seg.count - left > 0) work.push_back({m, seg.hi, seg.count - left});
    }
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw InternalError("cannot isolate roots of the zero polynomial");
    std::vector<IsolatedRoot> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        isolate_squarefree(factor, mult, out);
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return compare(a.root, b.root) == Cmp::Less;
    });
    return out;
}

namespace {

struct QInterval {
    Rat lo, hi;
};

QInterval iv_add(const QInterval& a, const QInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

QInterval iv_mul(const QInterval& a, const QInterval& b) {
    Rat v1 = a.lo * b.lo, v2 = a.lo * b.hi, v3 = a.hi * b.lo, v4 = a.hi * b.hi;
    return {std::min(std::min(v1, v2), std::min(v3, v4)),
            std::max(std::max(v1, v2), std::max(v3, v4))};
}

QInterval iv_eval(const UniPoly& p, const QInterval& x) {
    QInterval acc{Rat(0), Rat(0)};
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
        acc = iv_add(iv_mul(acc, x), QInterval{*it, *it});
    return acc;
}

}  // namespace

AlgReal image_value(const UniPoly& r, const AlgReal& z) {
    if (z.is_exact()) return AlgReal::exact(r.eval(z.value()));
    if (r.degree() <= 0) return AlgReal::exact(r.is_zero() ? Rat(0) : r.coeff(0));
    const UniPoly& d = z.defining();
    // Eliminate x between d(x) = 0 and y - r(x) = 0: the resulting polynomial
    // in y vanishes exactly on the images of the roots of d.
    std::vector<UniPoly> f;
    for (const Rat& cf : d.c) f.push_back(UniPoly::constant(cf));
    std::vector<UniPoly> g(r.c.size());
    g[0] = UniPoly({-r.coeff(0), Rat(1)});
    for (int i = 1; i <= r.degree(); ++i) g[static_cast<size_t>(i)] = UniPoly::constant(-r.coeff(i));
    UniPoly res = sylvester_resultant(f, g);
    if (res.is_zero()) throw InternalError("degenerate elimination in image_value");
    UniPoly rsf = scale_primitive(squarefree_part(res));
    for (const Rat& q : rational_roots(rsf)) {
        if (sign_at(r - UniPoly::constant(q), z) == Sign::Zero) return AlgReal::exact(q);
    }
    SturmChain chain(rsf);
    AlgReal zz = z;
    for (;;) {
        if (zz.is_exact()) return AlgReal::exact(r.eval(zz.value()));
        QInterval j = iv_eval(r, {zz.lo(), zz.hi()});
        Rat w = j.hi - j.lo;
        if (w == 0) w = zz.width();
        Rat pad = w / 1024;
        while (rsf.eval(j.lo) == 0) j.lo -= pad;
        while (rsf.eval(j.hi) == 0) j.hi += pad;
        if (chain.count_roots(j.lo, j.hi) == 1) return AlgReal::isolated(rsf, j.lo, j.hi);
        zz.refine();
    }
}

std::string to_float(const AlgReal& z, unsigned digits) {
    AlgReal zz = z;
    Rat target = Rat(1, 2 * pow10(digits));
    zz.refine_below(target);
    return rat_to_decimal(zz.is_exact() ? zz.value() : zz.midpoint(), digits);
}

Rat rational_between(const AlgReal& a, const AlgReal& b) {
    if (compare(a, b) != Cmp::Less) throw InternalError("rational_between needs a < b");
    if (a.is_exact() && b.is_exact()) return (a.value() + b.value()) / 2;
    AlgReal x = a, y = b;
    while (!(x.hi() < y.lo())) {
        // exact endpoints may coincide with the other value; refine handles it
        if (x.is_exact() && y.is_exact()) return (x.value() + y.value()) / 2;
        x.refine();
        y.refine();
    }
    return (x.hi() + y.lo()) / 2;
}

}  // namespace folia
