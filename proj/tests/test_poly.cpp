#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "folia/poly.hpp"
#include "support.hpp"

using namespace folia;
using testsupport::random_poly;

namespace {

UniPoly from_roots(const std::vector<std::pair<Rat, int>>& roots, const Rat& lead = Rat(1)) {
    UniPoly p = UniPoly::constant(lead);
    for (const auto& [z, m] : roots)
        for (int i = 0; i < m; ++i) p = p * UniPoly({-z, Rat(1)});
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    UniPoly a({Rat(1), Rat(2), Rat(3)});  // 3x^2 + 2x + 1
    UniPoly b({Rat(-1), Rat(1)});         // x - 1
    CHECK((a + b) == UniPoly({Rat(0), Rat(3), Rat(3)}));
    CHECK((a - a).is_zero());
    CHECK((a * b) == UniPoly({Rat(-1), Rat(-1), Rat(-1), Rat(3)}));
    CHECK((Rat(2) * b) == UniPoly({Rat(-2), Rat(2)}));
    CHECK((-b) == UniPoly({Rat(1), Rat(-1)}));
    CHECK(a.eval(Rat(2)) == Rat(17));
    CHECK(UniPoly().degree() == -1);
    CHECK(UniPoly::constant(Rat(0)).is_zero());
}

TEST_CASE("derivative of 7x^2 - 5x is 14x - 5") {
    UniPoly r({Rat(0), Rat(-5), Rat(7)});
    CHECK(r.derivative() == UniPoly({Rat(-5), Rat(14)}));
    CHECK(UniPoly::constant(Rat(3)).derivative().is_zero());
}

TEST_CASE("division with remainder") {
    std::mt19937 rng(7001);
    for (int i = 0; i < 50; ++i) {
        UniPoly a = random_poly(rng, 6);
        UniPoly b = random_poly(rng, 3);
        if (b.is_zero()) continue;
        auto [q, r] = divrem(a, b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(7002);
    for (int i = 0; i < 50; ++i) {
        UniPoly a = random_poly(rng, 4);
        UniPoly b = random_poly(rng, 3);
        if (b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("monic gcd") {
    UniPoly f = from_roots({{Rat(1), 1}, {Rat(-2), 1}}, Rat(3));
    UniPoly g = from_roots({{Rat(1), 1}, {Rat(3), 1}}, Rat(-5));
    CHECK(gcd_monic(f, g) == UniPoly({Rat(-1), Rat(1)}));

    UniPoly h = gcd_monic(UniPoly({Rat(1), Rat(1)}), UniPoly({Rat(2), Rat(0), Rat(1)}));
    CHECK(h.degree() == 0);

    std::mt19937 rng(7003);
    for (int i = 0; i < 30; ++i) {
        UniPoly common = random_poly(rng, 2);
        if (common.is_zero()) continue;
        UniPoly a = random_poly(rng, 3) * common;
        UniPoly b = random_poly(rng, 3) * common;
        if (a.is_zero() || b.is_zero()) continue;
        UniPoly d = gcd_monic(a, b);
        // The planted common factor divides the gcd, and the gcd divides both inputs.
        CHECK(divrem(d, common).second.is_zero());
        CHECK(divrem(a, d).second.is_zero());
        CHECK(divrem(b, d).second.is_zero());
    }
}

TEST_CASE("squarefree part keeps each root once") {
    UniPoly p = from_roots({{Rat(-1), 2}, {Rat(0), 2}, {Rat(2), 2}});
    UniPoly sf = squarefree_part(p);
    CHECK(sf.degree() == 3);
    CHECK(sf.eval(Rat(-1)) == Rat(0));
    CHECK(sf.eval(Rat(0)) == Rat(0));
    CHECK(sf.eval(Rat(2)) == Rat(0));
    CHECK(gcd_monic(sf, sf.derivative()).degree() == 0);
    CHECK(divrem(p, sf).second.is_zero());
}

TEST_CASE("squarefree decomposition reconstructs the input") {
    UniPoly p = Rat(3) * from_roots({{Rat(-1), 2}, {Rat(0), 2}, {Rat(2), 2}});
    auto dec = squarefree_decomposition(p);
    UniPoly product = UniPoly::constant(Rat(1));
    int nontrivial = 0;
    for (const auto& [f, m] : dec) {
        if (f.degree() >= 1) {
            ++nontrivial;
            CHECK(m == 2);
            CHECK(f.degree() == 3);
        }
        for (int i = 0; i < m; ++i) product = product * f;
    }
    CHECK(nontrivial == 1);
    // Same polynomial up to a constant factor.
    CHECK(divrem(p, product).second.is_zero());
    CHECK(p.degree() == product.degree());

    std::mt19937 rng(7004);
    for (int i = 0; i < 30; ++i) {
        UniPoly q = random_poly(rng, 3);
        if (q.degree() < 1) continue;
        UniPoly r = random_poly(rng, 2);
        if (r.degree() < 1) continue;
        UniPoly input = q * q * r;
        UniPoly rebuilt = UniPoly::constant(Rat(1));
        for (const auto& [f, m] : squarefree_decomposition(input))
            for (int j = 0; j < m; ++j) rebuilt = rebuilt * f;
        CHECK(divrem(input, rebuilt).second.is_zero());
        CHECK(input.degree() == rebuilt.degree());
    }
}

TEST_CASE("Sturm chain root counting") {
    // (x^2 - 2)(x^2 - 3): roots at +-sqrt(2), +-sqrt(3)
    UniPoly p = UniPoly({Rat(-2), Rat(0), Rat(1)}) * UniPoly({Rat(-3), Rat(0), Rat(1)});
    SturmChain chain(p);
    CHECK(chain.count_roots(Rat(1), Rat(2)) == 2);
    CHECK(chain.count_roots(Rat(-2), Rat(2)) == 4);
    CHECK(chain.count_roots(Rat(0), Rat(1)) == 0);
    CHECK(chain.count_roots(Rat(3, 2), Rat(2)) == 1);

    CHECK(count_distinct_roots(p, Rat(-10), Rat(10)) == 4);
    // Repeated roots are counted once.
    UniPoly sq = from_roots({{Rat(-2), 2}, {Rat(1, 2), 3}});
    CHECK(count_distinct_roots(sq, Rat(-10), Rat(10)) == 2);
}

TEST_CASE("root bound encloses every real root") {
    UniPoly p = from_roots({{Rat(-5), 1}, {Rat(1, 2), 1}, {Rat(7), 1}}, Rat(2));
    Rat b = root_bound(p);
    CHECK(b > 7);
    CHECK(count_distinct_roots(p, -b, b) == 3);

    std::mt19937 rng(7005);
    for (int i = 0; i < 30; ++i) {
        UniPoly q = random_poly(rng, 5);
        if (q.degree() < 1) continue;
        Rat bound = root_bound(q);
        int inside = count_distinct_roots(q, -bound, bound);
        // Widening the interval beyond the bound finds nothing new.
        CHECK(count_distinct_roots(q, -bound - 100, bound + 100) == inside);
    }
}

TEST_CASE("composition with a linear argument") {
    UniPoly p({Rat(1), Rat(-2), Rat(0), Rat(1)});  // x^3 - 2x + 1
    UniPoly q = compose_linear(p, Rat(2), Rat(3));
    for (Rat t : {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-7, 3)})
        CHECK(q.eval(t) == p.eval(Rat(2) + Rat(3) * t));
    CHECK(compose_linear(p, Rat(0), Rat(1)) == p);
    CHECK(compose_linear(p, Rat(5), Rat(0)) == UniPoly::constant(p.eval(Rat(5))));
}

TEST_CASE("resultant detects common roots") {
    // f(X) = X^2 - 2 and g(X) = y - X, coefficients in y: eliminating X
    // leaves (up to sign) y^2 - 2.
    std::vector<UniPoly> f = {UniPoly::constant(Rat(-2)), UniPoly(), UniPoly::constant(Rat(1))};
    std::vector<UniPoly> g = {UniPoly::x(), UniPoly::constant(Rat(-1))};
    UniPoly res = sylvester_resultant(f, g);
    UniPoly expected({Rat(-2), Rat(0), Rat(1)});
    CHECK((res == expected || res == -expected));

    // Identical polynomials share roots: the resultant vanishes.
    std::vector<UniPoly> h = {UniPoly::constant(Rat(-1)), UniPoly::constant(Rat(1))};
    CHECK(sylvester_resultant(h, h).is_zero());

    // Coprime constants-in-y case: nonzero constant resultant.
    std::vector<UniPoly> f2 = {UniPoly::constant(Rat(-1)), UniPoly::constant(Rat(1))};
    std::vector<UniPoly> g2 = {UniPoly::constant(Rat(-3)), UniPoly::constant(Rat(1))};
    UniPoly r2 = sylvester_resultant(f2, g2);
    CHECK(!r2.is_zero());
    CHECK(r2.degree() == 0);
}
