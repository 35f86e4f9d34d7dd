#include "folia/poly.hpp"

#include <algorithm>

namespace folia {

Rat UniPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c.size() <= 1) return UniPoly();
    std::vector<Rat> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = Rat(i) * c[i];
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a) {
    std::vector<Rat> r(a.c);
    for (auto& v : r) v = -v;
    return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return UniPoly(std::move(r));
}

UniPoly operator*(const Rat& k, const UniPoly& a) {
    if (k == 0) return UniPoly();
    std::vector<Rat> r(a.c);
    for (auto& v : r) v *= k;
    return UniPoly(std::move(r));
}

UniPoly compose_linear(const UniPoly& p, const Rat& a, const Rat& b) {
    // Horner over the polynomial ring: acc(t) = acc(t) * (a + b t) + c_i.
    UniPoly arg({a, b});
    UniPoly acc;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it)
        acc = acc * arg + UniPoly::constant(*it);
    return acc;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw InternalError("polynomial division by zero");
    UniPoly rem = a;
    if (a.degree() < b.degree()) return {UniPoly(), rem};
    std::vector<Rat> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const Rat& lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rat k = rem.leading() / lead;
        quo[static_cast<size_t>(shift)] = k;
        for (size_t i = 0; i < b.c.size(); ++i)
            rem.c[i + static_cast<size_t>(shift)] -= k * b.c[i];
        rem.trim();
    }
    return {UniPoly(std::move(quo)), rem};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
    return q;
}

UniPoly gcd_monic(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divrem(a, b).second;
        a = std::move(b);
        b = scale_primitive(r);  // rescaling keeps remainders small
    }
    if (a.is_zero()) return a;
    return Rat(1) / a.leading() * a;
}

UniPoly scale_primitive(const UniPoly& a) {
    if (a.is_zero()) return a;
    Int l = 1;
    for (const auto& v : a.c) l = boost::multiprecision::lcm(l, den(v));
    Int g = 0;
    for (const auto& v : a.c) g = boost::multiprecision::gcd(g, num(v) * (l / den(v)));
    if (g == 0) throw InternalError("primitive scaling of zero polynomial");
    return Rat(l, g) * a;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return p;
    UniPoly g = gcd_monic(p, p.derivative());
    if (g.degree() <= 0) return p;
    return exact_div(p, g);
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm (characteristic zero)
    UniPoly d = p.derivative();
    UniPoly a0 = gcd_monic(p, d);
    UniPoly b = exact_div(p, a0);
    UniPoly cpart = exact_div(d, a0);
    UniPoly e = cpart - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly a = gcd_monic(b, e);
        if (a.degree() > 0) out.emplace_back(scale_primitive(a), i);
        b = exact_div(b, a);
        cpart = exact_div(e, a);
        e = cpart - b.derivative();
        ++i;
    }
    return out;
}

Rat root_bound(const UniPoly& p) {
    if (p.degree() <= 0) return Rat(1);
    Rat m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, rat_abs(p.coeff(i)));
    return Rat(1) + m / rat_abs(p.leading());
}

SturmChain::SturmChain(const UniPoly& squarefree) {
    seq.push_back(scale_primitive(squarefree));
    if (squarefree.degree() < 1) return;
    seq.push_back(scale_primitive(squarefree.derivative()));
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        UniPoly r = divrem(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(scale_primitive(-r));
    }
}

int SturmChain::sign_changes_at(const Rat& x) const {
    int changes = 0, prev = 0;
    for (const auto& f : seq) {
        int s = sgn(f.eval(x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    if (a >= b) return 0;
    if (!seq.empty() && (seq[0].eval(a) == 0 || seq[0].eval(b) == 0))
        throw InternalError("root count endpoints must not be roots");
    return sign_changes_at(a) - sign_changes_at(b);
}

int count_distinct_roots(const UniPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw InternalError("root count of zero polynomial");
    SturmChain chain(squarefree_part(p));
    return chain.count_roots(a, b);
}

UniPoly sylvester_resultant(const std::vector<UniPoly>& f, const std::vector<UniPoly>& g) {
    const int m = static_cast<int>(f.size()) - 1;
    const int n = static_cast<int>(g.size()) - 1;
    if (m < 1 || n < 1 || f.back().is_zero() || g.back().is_zero())
        throw InternalError("sylvester_resultant needs positive degrees");
    const int N = m + n;
    std::vector<std::vector<UniPoly>> a(static_cast<size_t>(N),
                                        std::vector<UniPoly>(static_cast<size_t>(N)));
    for (int row = 0; row < n; ++row)
        for (int k = 0; k <= m; ++k) a[row][row + k] = f[static_cast<size_t>(m - k)];
    for (int row = 0; row < m; ++row)
        for (int k = 0; k <= n; ++k) a[n + row][row + k] = g[static_cast<size_t>(n - k)];

    // Bareiss fraction-free elimination; divisions below are exact.
    UniPoly denom = UniPoly::constant(1);
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < N; ++i)
                if (!a[i][k].is_zero()) { swap_row = i; break; }
            if (swap_row < 0) return UniPoly();  // singular: resultant is zero
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                UniPoly t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = exact_div(t, denom);
            }
            a[i][k] = UniPoly();
        }
        denom = a[k][k];
    }
    return sign < 0 ? -a[N - 1][N - 1] : a[N - 1][N - 1];
}

}  // namespace folia
