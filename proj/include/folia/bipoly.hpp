#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "folia/poly.hpp"

namespace folia {

// Polynomial in x and y, stored as coefficients of powers of y:
// p(x, y) = sum_i coeff_y[i](x) * y^i.
struct BivarPoly {
    std::vector<UniPoly> coeff_y;

    BivarPoly() = default;
    explicit BivarPoly(std::vector<UniPoly> cy) : coeff_y(std::move(cy)) { trim(); }

    static BivarPoly constant(const Rat& q) { return BivarPoly({UniPoly::constant(q)}); }
    static BivarPoly x() { return BivarPoly({UniPoly::x()}); }
    static BivarPoly y() { return BivarPoly({UniPoly(), UniPoly::constant(1)}); }
    static BivarPoly from_x(UniPoly p) { return BivarPoly({std::move(p)}); }

    void trim() {
        while (!coeff_y.empty() && coeff_y.back().is_zero()) coeff_y.pop_back();
    }

    bool is_zero() const { return coeff_y.empty(); }

    // Degree in y; -1 for the zero polynomial.
    int degree_y() const { return static_cast<int>(coeff_y.size()) - 1; }

    const UniPoly& coeff(int ydeg) const {
        static const UniPoly zero;
        if (ydeg < 0 || ydeg >= static_cast<int>(coeff_y.size())) return zero;
        return coeff_y[static_cast<size_t>(ydeg)];
    }

    Rat eval(const Rat& xv, const Rat& yv) const {
        Rat acc = 0;
        for (auto it = coeff_y.rbegin(); it != coeff_y.rend(); ++it)
            acc = acc * yv + it->eval(xv);
        return acc;
    }
};

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator-(const BivarPoly& a);
BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
BivarPoly pow(const BivarPoly& a, unsigned e);

// A map of the form p(x, y) = r(x) + s(x) * y.
struct LinearLikeMap {
    UniPoly r;
    UniPoly s;

    Rat eval(const Rat& xv, const Rat& yv) const { return r.eval(xv) + s.eval(xv) * yv; }
};

// Thrown when a polynomial has a y^j term with j >= 2.
struct NotLinearInY : std::runtime_error {
    explicit NotLinearInY(int ydeg)
        : std::runtime_error("expression must have degree at most 1 in y, got degree " +
                             std::to_string(ydeg)),
          degree_y(ydeg) {}
    int degree_y;
};

LinearLikeMap to_linear_like(const BivarPoly& p);

// Canonical textual form, re-parseable by the expression parser.
std::string format(const UniPoly& p);
std::string format(const BivarPoly& p);
std::string format(const LinearLikeMap& m);

}  // namespace folia
