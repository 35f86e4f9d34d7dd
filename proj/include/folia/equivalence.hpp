#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "folia/foliation.hpp"

namespace folia {

// The candidate coordinate changes relating two configurations: horizontal
// flip x -> -x, vertical flip y -> -y, and their composition. They form a
// Klein four-group; Identity and Rotation preserve orientation.
enum class Transformation { Identity, HFlip, VFlip, Rotation };

constexpr Transformation kAllTransformations[] = {Transformation::Identity,
                                                  Transformation::Rotation,
                                                  Transformation::HFlip,
                                                  Transformation::VFlip};

Transformation compose(Transformation a, Transformation b);
bool orientation_preserving(Transformation t);
const char* transformation_name(Transformation t);

// The correspondence of vertical-line values induced by a transformation:
// pairs (value attained by p at root j, value attained by q at the matched
// root), classified by whether they define a monotone bijection.
struct InducedSigma {
    enum class Monotonicity { Increasing, Decreasing, NotMonotone, IllDefined };
    std::vector<std::pair<AlgReal, AlgReal>> pairs;
    Monotonicity monotonicity = Monotonicity::Increasing;
};

const char* monotonicity_name(InducedSigma::Monotonicity m);

enum class Obstruction {
    KMismatch,
    TokenMismatch,
    SigmaIllDefined,
    SigmaNotMonotone,
    SigmaNotIncreasing,
    ExtensionFails,
    TrivialVsNontrivial,
};

const char* obstruction_code(Obstruction o);

struct VerdictPart {
    bool value = false;
    std::optional<Transformation> witness_transformation;
    std::optional<InducedSigma> witness_sigma;
    std::optional<Obstruction> obstruction;
};

struct EquivalenceVerdict {
    VerdictPart foliation_o;    // oriented foliation equivalence
    VerdictPart foliation_top;  // foliation equivalence
    VerdictPart function_o;     // oriented function equivalence
    VerdictPart function_top;   // function equivalence
};

struct PreconditionViolated : std::logic_error {
    explicit PreconditionViolated(const std::string& what) : std::logic_error(what) {}
};

// Apply a transformation to a token list (list reversal and entry rewriting
// for HFlip; sign negation for VFlip; both for Rotation).
std::vector<StripToken> transform_tokens(const std::vector<StripToken>& tokens, Transformation t);

// How strip indices and separatrix identities move under a transformation,
// for configurations with k roots.
int transform_strip(int strip, Transformation t, int k);
SeparatrixId transform_separatrix(const SeparatrixId& id, Transformation t, int k);

// All transformations t with tokens(p) == transform_tokens(tokens(q), t), in
// the fixed order Identity, Rotation, HFlip, VFlip.
std::vector<Transformation> token_match(const Configuration& p, const Configuration& q);

// Requires t in token_match(p, q).
InducedSigma induced_sigma(const Configuration& p, const Configuration& q, Transformation t);

// For configurations whose vertical-line values are all equal (a single
// bifurcation value), decide whether some canonical region keeps its side
// (below/above that value) under the region correspondence induced by t.
// Requires |B(p)| = |B(q)| = 1 and t an orientation-preserving token match.
bool singleton_extension_check(const Configuration& p, const Configuration& q, Transformation t);

// The four equivalence verdicts with witnesses and obstruction codes.
EquivalenceVerdict decide(const Configuration& p, const Configuration& q);

}  // namespace folia
