#pragma once

#include "folia/poly.hpp"

#include <string>
#include <vector>

namespace folia {

enum class Sign { Neg = -1, Zero = 0, Pos = 1 };
enum class Side { Left, Right };
enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

inline Sign sign_of(int s) { return s < 0 ? Sign::Neg : (s > 0 ? Sign::Pos : Sign::Zero); }
inline Sign operator-(Sign s) { return sign_of(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) {
    return sign_of(static_cast<int>(a) * static_cast<int>(b));
}

// A real algebraic number: either an exact rational, or the unique root of a
// squarefree polynomial inside an open interval with a sign change.
// Refinement shrinks the interval; the represented number never changes.
class AlgReal {
public:
    AlgReal() : exact_(true), value_(0) {}

    static AlgReal exact(Rat q);
    // Validates: defining squarefree, defining(lo)*defining(hi) < 0, exactly
    // one root in (lo, hi).
    static AlgReal isolated(UniPoly defining, Rat lo, Rat hi);

    bool is_exact() const { return exact_; }
    const Rat& value() const;        // requires is_exact()
    const UniPoly& defining() const; // requires !is_exact()

    // Enclosing interval; degenerate [q, q] for exact values.
    Rat lo() const { return exact_ ? value_ : lo_; }
    Rat hi() const { return exact_ ? value_ : hi_; }
    Rat width() const { return exact_ ? Rat(0) : Rat(hi_ - lo_); }
    Rat midpoint() const { return exact_ ? value_ : Rat((lo_ + hi_) / 2); }

    // Halve the interval (may collapse to exact if a bisection point is the root).
    void refine();
    void refine_below(const Rat& width);
    // Move one endpoint strictly inward, skipping points where `avoid` vanishes.
    void shrink_endpoint(Side side, const UniPoly& avoid);

    friend Cmp compare(const AlgReal& a, const AlgReal& b);

private:
    bool exact_;
    Rat value_;      // exact representation
    UniPoly defn_;   // isolated representation
    Rat lo_, hi_;
};

Cmp compare(const AlgReal& a, const AlgReal& b);
inline bool operator==(const AlgReal& a, const AlgReal& b) { return compare(a, b) == Cmp::Equal; }

// Sign of p at z, exactly.
Sign sign_at(const UniPoly& p, const AlgReal& z);

// Sign of p immediately to one side of z (constant on a small punctured gap).
// Well-defined even when p(z) = 0; never Zero. Rejects the zero polynomial.
Sign side_sign(const UniPoly& p, const AlgReal& z, Side side);

struct IsolatedRoot {
    AlgReal root;
    int multiplicity;
};

// All real roots of p (nonzero), ascending, with multiplicities.
// Rational roots come back exact when the coefficient factorizations stay
// within the trial-division budget; otherwise they are still correctly
// isolated, just in interval form.
std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p);

// r(z) as an algebraic number. Exact when z is exact or when the value is a
// detected rational root of the eliminating resultant.
AlgReal image_value(const UniPoly& r, const AlgReal& z);

// Decimal approximation with absolute error < 10^(-digits), fixed digits.
std::string to_float(const AlgReal& z, unsigned digits);

// A rational strictly between a and b (requires a < b).
Rat rational_between(const AlgReal& a, const AlgReal& b);

}  // namespace folia
