// Acceptance gate: one PASS/FAIL line per shipped guarantee, nonzero exit if
// any guarantee fails. Each check is self-contained and uses fixed seeds.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "folia/chordal.hpp"
#include "folia/equivalence.hpp"
#include "folia/foliation.hpp"
#include "support.hpp"

using namespace folia;
using testsupport::apply_map;
using testsupport::parse_map;
using testsupport::random_valid_map;

namespace {

const char* kPairP = "x*(7*x-5)+(x+1)^2*x^2*(x-2)^2*y";
const char* kPairQ = "2*x*(4*x-5)+(x+1)^2*x^2*(x-2)^2*y";
const char* kCubic = "x + x^3*y";
const char* kCubicNeg = "-x - x^3*y";
const char* kSwapP = "x*(3-2*x) + (x-1)^2*x^2*y";
const char* kSwapQ = "(x-1)*(2*x-1) - (x-1)^2*x^2*y";
const char* kMirrorP = "x + (x+1)^2*x^2*(x-1)^2*y";
const char* kMirrorQ = "-x + (x+1)^2*x^2*(x-1)^2*y";
const char* kTrivialP = "x + y";
const char* kTrivialQ = "x^2 - 3*x + (2+x^2)*y";

struct Checker {
    std::ostringstream problems;
    int count = 0;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (count > 0) problems << "; ";
            problems << what;
            ++count;
        }
    }
    bool ok() const { return count == 0; }
};

Configuration conf(const std::string& text) { return build_configuration(parse_map(text)); }

bool rational_equal(const AlgReal& v, int q) { return v == AlgReal::exact(Rat(q)); }

// ---- individual criteria ---------------------------------------------------

void degree7_pair(Checker& c) {
    LinearLikeMap p = parse_map(kPairP), q = parse_map(kPairQ);
    for (const LinearLikeMap* m : {&p, &q}) {
        auto bif = bifurcation_set(*m);
        c.expect(bif.size() == 3, "bifurcation set size");
        c.expect(bif.size() == 3 && rational_equal(bif[0], 0) && rational_equal(bif[1], 12) &&
                     rational_equal(bif[2], 18),
                 "bifurcation set values");
        for (int v : {0, 12, 18})
            c.expect(fiber_component_count(*m, AlgReal::exact(Rat(v))) == 5,
                     "fiber count at a bifurcation value");
        for (int v : {1, -7, 13})
            c.expect(fiber_component_count(*m, AlgReal::exact(Rat(v))) == 4,
                     "fiber count at a generic value");
    }
    EquivalenceVerdict v = decide(conf(kPairP), conf(kPairQ));
    c.expect(v.foliation_o.value, "foliation_o");
    c.expect(v.foliation_top.value, "foliation_top");
    c.expect(!v.function_top.value, "function_top should fail");
    c.expect(!v.function_o.value, "function_o should fail");
}

void cubic_vs_negative(Checker& c) {
    EquivalenceVerdict v = decide(conf(kCubic), conf(kCubicNeg));
    c.expect(v.foliation_o.value, "foliation_o");
    c.expect(v.function_top.value, "function_top");
    c.expect(!v.function_o.value, "function_o should fail");
    c.expect(v.function_o.obstruction == Obstruction::ExtensionFails,
             "function_o obstruction code");
}

void value_swap_pair(Checker& c) {
    EquivalenceVerdict v = decide(conf(kSwapP), conf(kSwapQ));
    c.expect(v.function_top.value, "function_top");
    bool witness_ok = v.function_top.witness_sigma.has_value() &&
                      v.function_top.witness_sigma->monotonicity ==
                          InducedSigma::Monotonicity::Decreasing &&
                      v.function_top.witness_sigma->pairs.size() == 2;
    if (witness_ok) {
        const auto& pr = v.function_top.witness_sigma->pairs;
        witness_ok = rational_equal(pr[0].first, 0) && rational_equal(pr[0].second, 1) &&
                     rational_equal(pr[1].first, 1) && rational_equal(pr[1].second, 0);
    }
    c.expect(witness_ok, "decreasing witness mapping 0->1, 1->0");
    c.expect(!v.function_o.value, "function_o should fail");
}

void mirror_pair(Checker& c) {
    EquivalenceVerdict v = decide(conf(kMirrorP), conf(kMirrorQ));
    c.expect(!v.foliation_o.value, "foliation_o should fail");
    c.expect(v.foliation_top.value, "foliation_top");
    c.expect(v.foliation_top.witness_transformation == Transformation::HFlip,
             "foliation_top witness");
    c.expect(v.function_top.value, "function_top");
}

void trivial_pair(Checker& c) {
    EquivalenceVerdict v = decide(conf(kTrivialP), conf(kTrivialQ));
    c.expect(v.foliation_o.value && v.foliation_top.value && v.function_o.value &&
                 v.function_top.value,
             "all four verdicts");
}

void equal_end_strips(Checker& c) {
    auto mid = conf("x*(2-x^2) + (x-1)^2*(x+1)^2*y").tokens;
    c.expect(mid.size() == 3 &&
                 mid[1] == StripToken::bounded_distinct(Sign::Pos, Sign::Neg, Sign::Pos,
                                                        Sign::Neg),
             "bounded strip with alternating ends");
    auto cyc = conf("x*(x-1) + x^2*(x-1)^2*y").tokens;
    c.expect(cyc.size() == 3 && cyc[1] == StripToken::bounded_equal(Sign::Pos, Sign::Pos),
             "equal-value strip, agreeing signs");
    auto sep = conf("x*(1-2*x)*(x-1) + x^2*(x-1)^2*y").tokens;
    c.expect(sep.size() == 3 && sep[1] == StripToken::bounded_equal(Sign::Pos, Sign::Neg),
             "equal-value strip, opposing signs");
}

void functoriality_suite(Checker& c) {
    std::mt19937 rng(424242);
    int bad_tokens = 0, bad_reflexive = 0, bad_symmetry = 0, bad_rescale = 0;
    std::vector<Configuration> cache;
    for (int i = 0; i < 200; ++i) {
        LinearLikeMap m = random_valid_map(rng);
        Configuration base = build_configuration(m);
        for (Transformation t : {Transformation::HFlip, Transformation::VFlip,
                                 Transformation::Rotation}) {
            Configuration moved = build_configuration(apply_map(m, t));
            if (!(moved.tokens == transform_tokens(base.tokens, t))) ++bad_tokens;
        }
        EquivalenceVerdict self = decide(base, base);
        if (!(self.foliation_o.value && self.foliation_top.value && self.function_o.value &&
              self.function_top.value))
            ++bad_reflexive;
        if (cache.size() < 24) cache.push_back(base);
    }
    for (size_t i = 0; i < cache.size(); ++i)
        for (size_t j = i + 1; j < cache.size(); ++j) {
            EquivalenceVerdict ab = decide(cache[i], cache[j]);
            EquivalenceVerdict ba = decide(cache[j], cache[i]);
            bool same = ab.foliation_o.value == ba.foliation_o.value &&
                        ab.foliation_top.value == ba.foliation_top.value &&
                        ab.function_o.value == ba.function_o.value &&
                        ab.function_top.value == ba.function_top.value;
            if (!same) ++bad_symmetry;
        }
    std::uniform_int_distribution<int> stretch(1, 4), shift(-3, 3);
    for (int i = 0; i < 60; ++i) {
        LinearLikeMap m = random_valid_map(rng);
        Configuration base = build_configuration(m);
        Rat alpha(stretch(rng), 1), beta(shift(rng), 1), b(shift(rng), 1), cy(stretch(rng), 1);
        LinearLikeMap value_change{Rat(alpha) * m.r + UniPoly::constant(beta), m.s};
        LinearLikeMap translated{compose_linear(m.r, b, Rat(1)), compose_linear(m.s, b, Rat(1))};
        LinearLikeMap fiber_scaled{m.r, Rat(cy) * m.s};
        for (const LinearLikeMap* v : {&value_change, &translated, &fiber_scaled}) {
            EquivalenceVerdict verdict = decide(base, build_configuration(*v));
            if (!(verdict.foliation_o.value && verdict.foliation_top.value &&
                  verdict.function_o.value && verdict.function_top.value))
                ++bad_rescale;
        }
    }
    c.expect(bad_tokens == 0, "token transformation mismatches: " + std::to_string(bad_tokens));
    c.expect(bad_reflexive == 0, "non-reflexive verdicts: " + std::to_string(bad_reflexive));
    c.expect(bad_symmetry == 0, "asymmetric verdicts: " + std::to_string(bad_symmetry));
    c.expect(bad_rescale == 0, "rescaling failures: " + std::to_string(bad_rescale));
}

void oracle_agreement(Checker& c) {
    std::vector<std::pair<std::string, std::string>> pairs = {
        {kPairP, kPairQ},       {kCubic, kCubicNeg},
        {kSwapP, kSwapQ},       {kMirrorP, kMirrorQ},
        {kTrivialP, kTrivialQ}, {"x*(2-x^2) + (x-1)^2*(x+1)^2*y",
                                 "x*(2-x^2) + (x-1)^2*(x+1)^2*y"},
        {"x*(x-1) + x^2*(x-1)^2*y", "x*(x-1) + x^2*(x-1)^2*y"},
        {"x*(1-2*x)*(x-1) + x^2*(x-1)^2*y", "x*(1-2*x)*(x-1) + x^2*(x-1)^2*y"},
    };
    for (const auto& [pt, qt] : pairs) {
        Configuration p = conf(pt), q = conf(qt);
        for (Transformation t : token_match(p, q)) {
            CorrespondenceReport r = check_correspondence(p, q, t, 1, 64);
            c.expect(r.violations.empty(),
                     "violations for a true witness on " + pt + " ~ " + qt);
            c.expect(r.inconclusive.empty(), "inconclusive triples on " + pt + " ~ " + qt);
        }
    }
    // The deliberately wrong pairing: reversing the vertical lines of the
    // degree-7 pair must produce at least one refuted triple.
    Configuration p = conf(kPairP), q = conf(kPairQ);
    c.expect(!check_correspondence(p, q, Transformation::Rotation, 1, 64).violations.empty(),
             "reversed pairing (rotation) not refuted");
    c.expect(!check_correspondence(p, q, Transformation::HFlip, 1, 64).violations.empty(),
             "reversed pairing (hflip) not refuted");

    std::mt19937 rng(171717);
    int bad = 0, inconclusive = 0;
    for (int i = 0; i < 50; ++i) {
        Configuration m = build_configuration(random_valid_map(rng));
        ConformanceReport r = check_token_conformance(m, 64);
        bad += static_cast<int>(r.violations.size());
        inconclusive += static_cast<int>(r.inconclusive.size());
    }
    c.expect(bad == 0, "token/geometry conformance violations: " + std::to_string(bad));
    c.expect(inconclusive == 0,
             "token/geometry conformance inconclusive: " + std::to_string(inconclusive));
}

void exact_arithmetic_suite(Checker& c) {
    UniPoly r({Rat(0), Rat(-5), Rat(7)});
    c.expect(image_value(r, AlgReal::exact(Rat(2))) == AlgReal::exact(Rat(18)),
             "quadratic image at 2");
    c.expect(image_value(r, AlgReal::exact(Rat(-1))) == AlgReal::exact(Rat(12)),
             "quadratic image at -1");

    std::mt19937 rng(99999);
    std::uniform_int_distribution<int> xd(-5, 5), dd(1, 2), md(1, 2), kd(1, 4);
    int bad = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<std::pair<Rat, int>> planted;
        int k = kd(rng);
        for (int i = 0; i < k; ++i) {
            Rat z(xd(rng), dd(rng));
            bool fresh = true;
            for (auto& [w, m] : planted) fresh = fresh && w != z;
            if (fresh) planted.push_back({z, md(rng)});
        }
        std::sort(planted.begin(), planted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        UniPoly p = UniPoly::constant(Rat(1));
        for (const auto& [z, m] : planted)
            for (int i = 0; i < m; ++i) p = p * UniPoly({-z, Rat(1)});
        if (p.degree() > 8) continue;
        auto roots = isolate_real_roots(p);
        if (roots.size() != planted.size()) {
            ++bad;
            continue;
        }
        for (size_t i = 0; i < roots.size(); ++i)
            if (!(roots[i].root == AlgReal::exact(planted[i].first)) ||
                roots[i].multiplicity != planted[i].second)
                ++bad;
    }
    c.expect(bad == 0, "planted-root isolation mismatches: " + std::to_string(bad));

    std::vector<AlgReal> xs;
    for (int i = -3; i <= 3; ++i) xs.push_back(AlgReal::exact(Rat(i, 2)));
    for (const auto& root : isolate_real_roots(UniPoly({Rat(-2), Rat(0), Rat(1)})))
        xs.push_back(root.root);
    for (const auto& root : isolate_real_roots(UniPoly({Rat(1), Rat(-4), Rat(0), Rat(1)})))
        xs.push_back(root.root);
    int order_bad = 0;
    for (const auto& a : xs)
        for (const auto& b : xs) {
            if (static_cast<int>(compare(a, b)) != -static_cast<int>(compare(b, a))) ++order_bad;
            for (const auto& cc : xs)
                if (compare(a, b) != Cmp::Greater && compare(b, cc) != Cmp::Greater &&
                    compare(a, cc) == Cmp::Greater)
                    ++order_bad;
        }
    c.expect(order_bad == 0, "order axiom failures: " + std::to_string(order_bad));
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Checker&)> body;
    };
    std::vector<Criterion> criteria = {
        {"degree7-pair-verdicts", degree7_pair},
        {"cubic-vs-negative", cubic_vs_negative},
        {"value-swap-pair", value_swap_pair},
        {"mirror-pair", mirror_pair},
        {"trivial-pair", trivial_pair},
        {"equal-end-strip-tokens", equal_end_strips},
        {"token-functoriality-suite", functoriality_suite},
        {"sampling-oracle-agreement", oracle_agreement},
        {"exact-arithmetic-suite", exact_arithmetic_suite},
    };

    int failures = 0;
    double fixture_seconds = 0;
    for (const auto& criterion : criteria) {
        Checker c;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        // The first six entries are the fixed desk-scale fixtures.
        if (&criterion - criteria.data() < 6) fixture_seconds += elapsed.count();
        if (c.ok()) {
            std::printf("PASS %s\n", criterion.name);
        } else {
            ++failures;
            std::printf("FAIL %s: %s\n", criterion.name, c.problems.str().c_str());
        }
    }

    if (fixture_seconds < 5.0) {
        std::printf("PASS fixtures-under-5s (%.2fs)\n", fixture_seconds);
    } else {
        ++failures;
        std::printf("FAIL fixtures-under-5s (%.2fs)\n", fixture_seconds);
    }

    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
