#include "kspec/classifier.hpp"

#include "kspec/diophantine.hpp"

#include <stdexcept>

namespace kspec::classifier {

namespace {

// Index k of a degenerate pair (p <= n). The recurrence reaches any bound
// in O(log n) steps.
long long degenerate_index_of(long long p, long long n) {
    Integer pp(1), nn(3);
    for (long long k = 1;; ++k) {
        if (nn == static_cast<long>(n) && pp == static_cast<long>(p)) return k;
        if (nn > static_cast<long>(n)) {
            throw std::logic_error("degenerate pair not produced by the recurrence");
        }
        std::tie(pp, nn) = dioph::next_pair(pp, nn);
    }
}

std::optional<int> theorem1_case_of(long long p, long long n, bool degenerate) {
    if (p == 0) return 1;
    if (p == 1 && n >= 6) return 2;
    if (p == 2 && n != 8) return 3;
    if (p >= 3 && !degenerate) return 4;
    return std::nullopt;
}

Q2Verdict q2_of(long long p, long long n, bool degenerate) {
    if (p == 0) return Q2Verdict::Rigid;
    if (p == 1) return n >= 6 ? Q2Verdict::Rigid : Q2Verdict::Open;
    if (p == 2) return n == 8 ? Q2Verdict::RigidViaFujita : Q2Verdict::Rigid;
    // p >= 3: rigid in all dimensions except at an exceptional pair itself
    return degenerate ? Q2Verdict::Open : Q2Verdict::Rigid;
}

}  // namespace

ClassificationResult classify(long long p, long long n) {
    const long long pc = patodi::canonical_p(p, n);  // validates the range

    ClassificationResult r;
    r.p = pc;
    r.n = n;
    r.degenerate = dioph::is_degenerate(pc, n);
    r.lambdas = patodi::lambda_coefficients(pc, n);
    const patodi::NumericalCondition cond = patodi::numerical_condition(pc, n);
    r.reduced_coeff = cond.reduced_coeff;
    r.numerical_ok = cond.holds;
    r.requires_cohomological_einstein = !(pc > 0 && pc % 2 == 0);

    if (r.degenerate) {
        r.q1_verdict = Q1Verdict::DegeneratePair;
        r.degenerate_index = degenerate_index_of(pc, n);
    } else if (r.numerical_ok) {
        r.q1_verdict = Q1Verdict::RigidByLemma;
    } else if (pc == 2 && n == 8) {
        r.q1_verdict = Q1Verdict::Lambda1Zero;
    } else {
        r.q1_verdict = Q1Verdict::ConditionFails;
    }

    r.theorem1_case = theorem1_case_of(pc, n, r.degenerate);
    r.q2_verdict = q2_of(pc, n, r.degenerate);

    if (n == 1 && pc == 1) {
        r.warnings.push_back(
            "the positivity analysis behind the Q1 verdict assumes n >= 2; "
            "(1, 1) is outside its range");
    }
    if (r.theorem1_case && !r.numerical_ok && !r.degenerate && !(pc == 2 && n == 8)) {
        // The claimed case table accepts this pair, but the computed
        // condition rejects it. Known instances: (1, 6) and (1, 7).
        r.warnings.push_back(
            "claimed rigidity case " + std::to_string(*r.theorem1_case) +
            " covers (p, n) = (" + std::to_string(pc) + ", " + std::to_string(n) +
            "), but the computed condition fails: lambda1 = " +
            r.lambdas.lambda1.str() + ", reduced coefficient = " +
            r.reduced_coeff.str());
    }

    return r;
}

std::string_view to_string(Q1Verdict v) {
    switch (v) {
        case Q1Verdict::RigidByLemma: return "RigidByLemma";
        case Q1Verdict::DegeneratePair: return "DegeneratePair";
        case Q1Verdict::Lambda1Zero: return "Lambda1Zero";
        case Q1Verdict::ConditionFails: return "ConditionFails";
    }
    return "?";
}

std::string_view to_string(Q2Verdict v) {
    switch (v) {
        case Q2Verdict::Rigid: return "Rigid";
        case Q2Verdict::RigidViaFujita: return "RigidViaFujita";
        case Q2Verdict::Open: return "Open";
    }
    return "?";
}

std::string q1_label(const ClassificationResult& r) {
    std::string s(to_string(r.q1_verdict));
    if (r.q1_verdict == Q1Verdict::DegeneratePair) {
        s += "(" + std::to_string(r.degenerate_index) + ")";
    }
    return s;
}

bool claimed_in_condition_set(long long p, long long n) {
    if (p == 0) return n >= 2;
    if (p == 1) return n >= 6;
    if (p == 2) return n >= 2 && n != 8;
    return n >= p;  // p >= 3: all n >= p
}

LastLemmaReport verify_lastlemma(long long max_n) {
    if (max_n < 2) {
        throw std::invalid_argument("verify_lastlemma: max_n must be >= 2");
    }
    LastLemmaReport rep;
    rep.max_n = max_n;
    for (long long n = 2; n <= max_n; ++n) {
        for (long long p = 0; p <= n; ++p) {
            const patodi::NumericalCondition cond = patodi::numerical_condition(p, n);
            const bool claimed = claimed_in_condition_set(p, n);
            if (cond.holds && !claimed) rep.computed_minus_claimed.emplace_back(p, n);
            if (claimed && !cond.holds) rep.claimed_minus_computed.emplace_back(p, n);
            if (p <= 2) {
                rep.boundary.push_back(ConditionCell{p, n, cond.holds, claimed,
                                                     cond.lambda1, cond.reduced_coeff});
            }
        }
    }
    return rep;
}

}  // namespace kspec::classifier
