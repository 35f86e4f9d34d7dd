#include "folia/bipoly.hpp"

namespace folia {

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    std::vector<UniPoly> out(std::max(a.coeff_y.size(), b.coeff_y.size()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return BivarPoly(std::move(out));
}

BivarPoly operator-(const BivarPoly& a) {
    std::vector<UniPoly> out(a.coeff_y.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = -a.coeff_y[i];
    return BivarPoly(std::move(out));
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return BivarPoly();
    std::vector<UniPoly> out(a.coeff_y.size() + b.coeff_y.size() - 1);
    for (size_t i = 0; i < a.coeff_y.size(); ++i)
        for (size_t j = 0; j < b.coeff_y.size(); ++j)
            out[i + j] = out[i + j] + a.coeff_y[i] * b.coeff_y[j];
    return BivarPoly(std::move(out));
}

BivarPoly pow(const BivarPoly& a, unsigned e) {
    BivarPoly acc = BivarPoly::constant(1);
    BivarPoly base = a;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

LinearLikeMap to_linear_like(const BivarPoly& p) {
    if (p.degree_y() > 1) throw NotLinearInY(p.degree_y());
    return LinearLikeMap{p.coeff(0), p.coeff(1)};
}

namespace {

// One monomial c * x^xe * y^ye as canonical text. `leading` selects whether the
// sign is glued to the coefficient (start of expression) or handled by the
// caller as a binary +/- joiner. Leading negative terms always spell out the
// coefficient: "-x^2" would re-parse as (-x)^2, so we emit "-1*x^2" instead.
std::string monomial_text(const Rat& c, int xe, int ye, bool leading) {
    Rat mag = rat_abs(c);
    bool neg = sgn(c) < 0;
    std::string body;
    bool need_coeff = mag != 1 || (xe == 0 && ye == 0) || (leading && neg);
    if (need_coeff) body = rat_to_string(mag);
    if (xe > 0) {
        if (!body.empty()) body += "*";
        body += xe == 1 ? "x" : "x^" + std::to_string(xe);
    }
    if (ye > 0) {
        if (!body.empty()) body += "*";
        body += ye == 1 ? "y" : "y^" + std::to_string(ye);
    }
    if (leading) return neg ? "-" + body : body;
    return (neg ? " - " : " + ") + body;
}

}  // namespace

std::string format(const BivarPoly& p) {
    std::string out;
    for (int ye = 0; ye <= p.degree_y(); ++ye) {
        const UniPoly& cx = p.coeff(ye);
        for (int xe = cx.degree(); xe >= 0; --xe) {
            const Rat& c = cx.coeff(xe);
            if (c == 0) continue;
            out += monomial_text(c, xe, ye, out.empty());
        }
    }
    return out.empty() ? "0" : out;
}

std::string format(const UniPoly& p) { return format(BivarPoly::from_x(p)); }

std::string format(const LinearLikeMap& m) {
    return format(BivarPoly({m.r, m.s}));
}

}  // namespace folia
