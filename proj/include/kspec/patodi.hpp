#pragma once

#include "kspec/rational.hpp"

#include <utility>
#include <vector>

namespace kspec::patodi {

// Heat-invariant coefficients for the Laplacian on p-forms of a compact
// Kaehler manifold of complex dimension n (real dimension 2n). Everything
// here is exact rational arithmetic; the curvature enters only through the
// three scalar integrals of CurvatureIntegrals, supplied by the caller.

/// The combinatorial weights in the degree-two heat coefficient:
///   lambda1 =  C(2n,p)/180 - C(2n-2,p-1)/12 + C(2n-4,p-2)/2
///   lambda2 = -C(2n,p)/180 + C(2n-2,p-1)/2  - 2 C(2n-4,p-2)
///   lambda3 =  C(2n,p)/72  - C(2n-2,p-1)/6  + C(2n-4,p-2)/2
/// with the extended binomial conventions of binom_ext. Stored with the
/// canonical index p <= n actually used for the evaluation.
struct PatodiCoefficients {
    Rational lambda1, lambda2, lambda3;
    long long p = 0;
    long long n = 1;
    friend bool operator==(const PatodiCoefficients&,
                           const PatodiCoefficients&) = default;
};

/// The three curvature integrals the degree-two invariant depends on:
/// int s_g^2 dvol, int |tracefree Ricci form|^2 dvol, int |Bochner|^2 dvol.
/// All are integrals of squared norms, hence must be >= 0.
struct CurvatureIntegrals {
    Rational int_s2, int_ric2, int_B2;
};

struct HeatInvariants {
    Rational a0, a1, a2;
    long long p = 0;
    long long n = 1;
};

struct NumericalCondition {
    bool holds = false;
    Rational reduced_coeff;
    Rational lambda1;
};

/// min(p, 2n-p). Throws std::out_of_range unless n >= 1 and 0 <= p <= 2n.
long long canonical_p(long long p, long long n);

/// Coefficients at the canonical index min(p, 2n-p). Spec^p = Spec^{2n-p},
/// so the canonical form is the one with spectral meaning; it also keeps the
/// n = 1 edge (where the literal v = 0 convention breaks the p <-> 2n-p
/// symmetry) well defined.
PatodiCoefficients lambda_coefficients(long long p, long long n);

/// Literal evaluation at p, no canonicalization. Exists for the duality
/// sweeps, which assert invariance under p -> 2n-p of the raw formulas.
PatodiCoefficients lambda_coefficients_raw(long long p, long long n);

/// a_{0,p} = C(2n,p) * vol. Requires vol > 0.
Rational a0(long long p, long long n, const Rational& vol);

/// The exact rational multiplying int s_g dvol in a_{1,p}:
///   (2n-2)!/(p!(2n-p)!) * [p^2 - 2np + n(2n-1)/3].
/// Vanishes exactly on the degenerate pairs of the diophantine module.
Rational a1_coefficient(long long p, long long n);

/// a_{2,p} as a linear functional of the curvature integrals:
///   (2/(n(n+1)) l1 + 1/(2n) l2 + l3) * int_s2
/// + (16/(n+2) l1 + 2 l2)             * int_ric2
/// + 4 l1                             * int_B2.
/// Rejects negative integrals.
Rational a2_general(long long p, long long n, const CurvatureIntegrals& integrals);

/// a_{2,p} specialized to constant holomorphic sectional curvature c, where
/// s_g = n(n+1)c, the tracefree Ricci form vanishes and the Bochner tensor
/// vanishes: a2_general with integrals {[n(n+1)c]^2 vol, 0, 0}.
Rational a2_const_hsc(long long p, long long n, const Rational& c, const Rational& vol);

/// a0, a1, a2 bundled for the constant-HSC model (a1 uses
/// int s_g dvol = n(n+1)c * vol).
HeatInvariants heat_invariants_const_hsc(long long p, long long n,
                                         const Rational& c, const Rational& vol);

/// The coefficient left in front of int {s^2 - [n(n+1)c]^2} dvol after the
/// tracefree-Ricci integral is eliminated via the cohomologically-Einstein
/// identity:  (4n+2)/((n+1)(n+2)) l1 + l2/2 + l3.
Rational reduced_a2_coefficient(long long p, long long n);

/// The positivity condition driving the rigidity argument:
/// holds iff reduced_a2_coefficient > 0 and lambda1 > 0.
/// Raw values are returned alongside so callers can report them verbatim.
NumericalCondition numerical_condition(long long p, long long n);

/// Cells (p, n), 2 <= n <= max_n, 0 <= p <= 2n, where the raw (un-reduced)
/// lambda lines, a1_coefficient or a0 fail invariance under p -> 2n-p.
/// Expected empty; exposed so `verify duality` can prove it exhaustively.
std::vector<std::pair<long long, long long>> duality_mismatches(long long max_n);

/// Cells where
///   (2/(n(n+1))) l1 + (1/(2n)) l2 + l3 + ((16/(n+2)) l1 + 2 l2) (n-1)/(4n)
/// differs from reduced_a2_coefficient. Expected empty: eliminating the
/// tracefree-Ricci integral must reproduce the reduced coefficient exactly.
std::vector<std::pair<long long, long long>> reduction_identity_mismatches(long long max_n);

}  // namespace kspec::patodi
