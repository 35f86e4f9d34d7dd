#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace folia {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an internal invariant is violated (maps to CLI exit code 1).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline int sgn(const Rat& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

inline int sgn(const Int& n) {
    if (n > 0) return 1;
    if (n < 0) return -1;
    return 0;
}

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    Int n = num(q), d = den(q);
    Int quo = n / d;
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

Int pow10(unsigned digits);

// "a/b" with b omitted when 1; denominators kept positive by cpp_rational.
std::string rat_to_string(const Rat& q);

// Fixed-point decimal with exactly `digits` fractional digits, rounded to
// nearest (ties away from zero). rat_to_decimal(1/3, 4) == "0.3333".
std::string rat_to_decimal(const Rat& q, unsigned digits);

}  // namespace folia
