#pragma once

#include "kspec/patodi.hpp"
#include "kspec/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kspec::classifier {

// Decision logic for the two rigidity questions at a given (p, n):
//   Q1: does agreement of a_0, a_1, a_2 with a constant-HSC manifold force
//       constant HSC, given the cohomologically-Einstein hypothesis?
//   Q2: does Spec^p agreement with CP^n(c), c > 0, force a holomorphic
//       isometry with CP^n(c)?
// The classifier reports both the claimed case table and the computed
// positivity condition; whenever they disagree it keeps both and attaches a
// warning instead of silently picking a side.

enum class Q1Verdict {
    RigidByLemma,    // non-degenerate and the computed condition holds
    DegeneratePair,  // (p, n) is an exceptional pair; a_1 is uninformative
    Lambda1Zero,     // lambda1 vanishes: exactly (2, 8)
    ConditionFails,  // computed condition fails and no special case applies
};

enum class Q2Verdict {
    Rigid,           // covered by a claimed case of the classification
    RigidViaFujita,  // the (2, 8) case, settled by Fujita's volume
                     // characterization of CP^n among Fano Kaehler-Einstein
                     // manifolds (consumed as a citation, never computed)
    Open,
};

struct ClassificationResult {
    long long p = 0;  // canonicalized so that p <= n
    long long n = 1;
    bool degenerate = false;
    patodi::PatodiCoefficients lambdas;
    Rational reduced_coeff;
    bool numerical_ok = false;
    Q1Verdict q1_verdict = Q1Verdict::ConditionFails;
    long long degenerate_index = 0;  // k when q1_verdict == DegeneratePair
    Q2Verdict q2_verdict = Q2Verdict::Open;
    std::optional<int> theorem1_case;  // 1..4 when a claimed clause applies
    bool requires_cohomological_einstein = true;
    std::vector<std::string> warnings;
};

/// Requires n >= 1 and 0 <= p <= 2n; p > n is folded to 2n - p via duality.
ClassificationResult classify(long long p, long long n);

std::string_view to_string(Q1Verdict v);
std::string_view to_string(Q2Verdict v);
/// "DegeneratePair(2)" style label carrying the index payload.
std::string q1_label(const ClassificationResult& r);

/// One cell of the positivity-region table.
struct ConditionCell {
    long long p = 0, n = 0;
    bool holds = false;
    bool claimed = false;
    Rational lambda1, reduced_coeff;
};

struct LastLemmaReport {
    long long max_n = 0;
    std::vector<std::pair<long long, long long>> computed_minus_claimed;
    std::vector<std::pair<long long, long long>> claimed_minus_computed;
    // The p <= 2 rows in full: the claimed set has all its n-thresholds
    // there (p >= 3 is claimed uniformly).
    std::vector<ConditionCell> boundary;
};

/// The closed-form set the positivity condition is claimed to equal:
/// {(0, n>=2), (1, n>=6), (2, n>=2 and n != 8), (p>=3, all n>=p)}.
bool claimed_in_condition_set(long long p, long long n);

/// Computes S = {(p, n) : 0 <= p <= n, 2 <= n <= max_n, condition holds}
/// exactly and diffs it against the claimed set.
LastLemmaReport verify_lastlemma(long long max_n);

}  // namespace kspec::classifier
