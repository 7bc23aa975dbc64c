#pragma once

#include "kspec/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string_view>
#include <vector>

namespace kspec::cpn {

// Exact spectrum of the Laplacian on functions of CP^n with the Fubini-Study
// metric normalized to constant holomorphic sectional curvature c, plus a
// truncated heat-trace evaluator with a proven tail bound and a high-precision
// extraction of the small-time expansion coefficients.
//
// Level-k data (k >= 0):
//   eigenvalue   k(k+n)c
//   multiplicity C(n+k,k)^2 - C(n+k-1,k-1)^2
// Anchors: level 1 is (n+1)c with multiplicity n^2+2n, and n = 1 collapses
// to the round 2-sphere (eigenvalues l(l+1)c, multiplicities 2l+1).

/// Arbitrary-precision real (MPFR). Precision is the thread-local
/// Real::default_precision at construction time; fit_asymptotics sets it
/// from its digits argument, everything else inherits the caller's setting.
using Real = boost::multiprecision::mpfr_float;

/// k(k+n)c exactly. Requires k >= 0, n >= 1, c > 0.
Rational eigenvalue(long long k, long long n, const Rational& c);

/// C(n+k,k)^2 - C(n+k-1,k-1)^2 (1 at k = 0). Requires k >= 0, n >= 1.
Integer multiplicity(long long k, long long n);

struct HeatTraceResult {
    Real value;             // sum_{k <= K} multiplicity(k,n) exp(-k(k+n)c t)
    Real truncation_bound;  // proven bound on the discarded tail
    bool converged = true;  // false if term_cap was hit before bound < eps
    long long terms_used = 0;  // K + 1
};

/// Sums the heat trace at time t > 0 until the tail is provably below eps.
/// The bound is a geometric majorant: consecutive-term ratios
///   r_k = ((k+n)/(k+1))^2 * (2k+n+2)/(2k+n) * exp(-(2k+1+n)ct)
/// decrease in k, so the tail beyond K is at most term_{K+1}/(1 - r_{K+1})
/// once r_{K+1} < 1. Both the value and the bound are returned; if the bound
/// cannot be pushed below eps within term_cap terms, the achieved bound is
/// reported with converged = false.
HeatTraceResult heat_trace(const Real& t, long long n, const Rational& c,
                           const Real& eps, long long term_cap = 4'000'000);

struct HeatTraceFit {
    long long n = 1;
    Rational c;
    int degree = 4;
    unsigned digits = 60;        // working precision (decimal digits)
    std::vector<Real> t_grid;    // geometric grid in [t_min, t_max]
    std::vector<Real> fitted;    // a_0 .. a_D
    Real fit_residual;           // rms of y - fit over the grid
    Real relative_residual;      // fit_residual / max |y|
    Real truncation_bound;       // max heat-trace tail bound over the grid
    bool residual_ok = true;     // relative_residual below the sanity gate
};

/// Evaluates Z(t) on a geometric grid, multiplies by (4 pi t)^n and fits a
/// degree-D polynomial in t by least squares (normal equations in extended
/// precision, solved on the scaled variable t/t_max). Grid heat traces are
/// summed to a tail bound below 1e-50, well under the 1e-40 contract.
/// A relative residual above 1e-6 marks the fit ill-conditioned
/// (residual_ok = false); with default settings the genuine model residual
/// is orders of magnitude smaller.
HeatTraceFit fit_asymptotics(long long n, const Rational& c, int degree,
                             std::string_view t_min, std::string_view t_max,
                             int grid_size, unsigned digits);

/// Defaults: degree 4, t in [1e-3, 1e-2], 24 points, 60 digits.
HeatTraceFit fit_asymptotics(long long n, const Rational& c);

/// pi at the current default precision.
Real pi_value();

/// Conversions at the current default precision.
Real to_real(const Rational& q);
Real to_real(const Integer& z);

/// Riemannian volume (4 pi / c)^n / n!; used only for the a_0 cross-check
/// (the a_1/a_0 and a_2/a_0 ratios are volume-free).
Real cpn_volume(long long n, const Rational& c);

}  // namespace kspec::cpn
