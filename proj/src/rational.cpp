#include "folia/rational.hpp"

namespace folia {

Int pow10(unsigned digits) {
    Int p = 1;
    for (unsigned i = 0; i < digits; ++i) p *= 10;
    return p;
}

std::string rat_to_string(const Rat& q) {
    Int n = num(q), d = den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

std::string rat_to_decimal(const Rat& q, unsigned digits) {
    Int scale = pow10(digits);
    // round q*scale to nearest integer, ties away from zero
    Int n = num(q) * scale;
    Int d = den(q);  // > 0
    bool neg = n < 0;
    Int a = neg ? Int(-n) : n;
    Int mag = a / d;
    if (2 * (a % d) >= d) ++mag;
    if (mag == 0) neg = false;
    Int ip = mag / scale;
    Int fp = mag % scale;
    std::string out = neg ? "-" : "";
    out += ip.str();
    if (digits > 0) {
        std::string frac = fp.str();
        out += ".";
        out += std::string(digits - frac.size(), '0');
        out += frac;
    }
    return out;
}

}  // namespace folia
