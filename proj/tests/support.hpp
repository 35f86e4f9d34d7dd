#pragma once

// Shared helpers for the test suite: a deterministic generator of valid maps
// r(x) + s(x)*y (rational roots, multiplicities >= 2, r' nonzero at each
// root) and the coordinate changes the equivalence machinery reasons about.

#include <random>
#include <stdexcept>
#include <vector>

#include "folia/equivalence.hpp"
#include "folia/expr.hpp"
#include "folia/foliation.hpp"
#include "folia/poly.hpp"

namespace testsupport {

using folia::LinearLikeMap;
using folia::Rat;
using folia::Transformation;
using folia::UniPoly;

inline Rat random_rat(std::mt19937& rng, int num_range = 6, int den_range = 3) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rat(num(rng), den(rng));
}

inline UniPoly random_poly(std::mt19937& rng, int max_degree, int coeff_range = 6) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rat> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_rat(rng, coeff_range));
    return UniPoly(std::move(c));
}

// A map accepted by validate_submersion, with rational roots so the sampling
// oracle stays in scope. Roots are drawn from a small grid; multiplicities
// alternate between 2 and 3 to exercise both sign behaviors of s.
inline LinearLikeMap random_valid_map(std::mt19937& rng, int max_roots = 3) {
    std::uniform_int_distribution<int> kdist(0, max_roots);
    std::uniform_int_distribution<int> pick(-4, 4);
    std::uniform_int_distribution<int> mult(2, 3);
    std::uniform_int_distribution<int> lead(0, 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        int k = kdist(rng);
        std::vector<Rat> roots;
        while (static_cast<int>(roots.size()) < k) {
            Rat z(pick(rng), 1);
            bool fresh = true;
            for (const Rat& w : roots) fresh = fresh && w != z;
            if (fresh) roots.push_back(z);
        }
        UniPoly s = UniPoly::constant(lead(rng) == 0 ? Rat(1) : Rat(-1));
        for (const Rat& z : roots) {
            UniPoly lin({-z, Rat(1)});
            int m = mult(rng);
            for (int i = 0; i < m; ++i) s = s * lin;
        }
        UniPoly r = random_poly(rng, 3);
        LinearLikeMap m{r, s};
        if (!folia::validate_submersion(m)) return m;
    }
    throw std::logic_error("random_valid_map: no valid map after 1000 attempts");
}

// The map (x, y) -> p(t(x, y)) for the four candidate coordinate changes.
inline LinearLikeMap apply_map(const LinearLikeMap& m, Transformation t) {
    using folia::compose_linear;
    switch (t) {
        case Transformation::Identity:
            return m;
        case Transformation::HFlip:
            return {compose_linear(m.r, Rat(0), Rat(-1)), compose_linear(m.s, Rat(0), Rat(-1))};
        case Transformation::VFlip:
            return {m.r, -m.s};
        case Transformation::Rotation:
            return {compose_linear(m.r, Rat(0), Rat(-1)), -compose_linear(m.s, Rat(0), Rat(-1))};
    }
    throw std::logic_error("apply_map: bad transformation");
}

inline LinearLikeMap parse_map(const std::string& text) {
    return folia::to_linear_like(folia::parse(text));
}

}  // namespace testsupport
