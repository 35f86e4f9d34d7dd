#pragma once

#include "folia/rational.hpp"

#include <utility>
#include <vector>

namespace folia {

// Univariate polynomial over Q, dense coefficients in ascending degree order.
// Zero polynomial has an empty coefficient vector; trailing zeros are trimmed.
struct UniPoly {
    std::vector<Rat> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rat& v) { return UniPoly(std::vector<Rat>{v}); }
    static UniPoly x() { return UniPoly({Rat(0), Rat(1)}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& leading() const { return c.back(); }
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : Rat(0);
    }

    Rat eval(const Rat& x) const;
    UniPoly derivative() const;

    bool operator==(const UniPoly&) const = default;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rat& k, const UniPoly& a);

// p(a + b*t) as a polynomial in t.
UniPoly compose_linear(const UniPoly& p, const Rat& a, const Rat& b);

// Quotient and remainder of a / b, b nonzero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

// a / b when the division is exact; throws InternalError on nonzero remainder.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// Monic gcd; zero if both inputs are zero.
UniPoly gcd_monic(UniPoly a, UniPoly b);

// Scale by a positive rational so coefficients become coprime integers
// (keeps signs and roots). Zero stays zero.
UniPoly scale_primitive(const UniPoly& a);

// p with all repeated roots collapsed to simple ones: p / gcd(p, p').
UniPoly squarefree_part(const UniPoly& p);

// Yun decomposition: pairwise-coprime squarefree factors with multiplicities,
// product of f_i^{m_i} equal to p up to a constant. Multiplicities ascending.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// Strict bound B with every real root of p inside (-B, B).
Rat root_bound(const UniPoly& p);

// Sturm chain of a squarefree polynomial; counts distinct real roots.
struct SturmChain {
    std::vector<UniPoly> seq;

    explicit SturmChain(const UniPoly& squarefree);
    int sign_changes_at(const Rat& x) const;
    // Number of roots in the open interval (a, b); requires f(a) != 0, f(b) != 0.
    int count_roots(const Rat& a, const Rat& b) const;
};

// Convenience one-shot root count over the squarefree part of p;
// requires p(a) != 0 and p(b) != 0.
int count_distinct_roots(const UniPoly& p, const Rat& a, const Rat& b);

// Resultant in x of two polynomials whose coefficients are themselves
// univariate polynomials (in a second variable), computed as the Sylvester
// determinant by fraction-free (Bareiss) elimination. Degrees must be >= 1.
UniPoly sylvester_resultant(const std::vector<UniPoly>& f, const std::vector<UniPoly>& g);

}  // namespace folia
