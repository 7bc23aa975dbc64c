#include "kspec/cpn_spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kspec::cpn {

namespace {

void check_level(long long k, long long n) {
    if (k < 0 || n < 1) {
        throw std::out_of_range("cpn: need k >= 0 and n >= 1");
    }
    if (k > (1ll << 30) || n > (1ll << 30)) {  // keeps k(k+n) inside long long
        throw std::out_of_range("cpn: level or dimension too large");
    }
}

// Least squares by normal equations: returns b minimizing |A b - y|_2.
// The systems here are tiny ((degree+1) square); Gaussian elimination with
// partial pivoting at working precision is plenty.
std::vector<Real> solve_least_squares(const std::vector<std::vector<Real>>& A,
                                      const std::vector<Real>& y) {
    const size_t m = A.size();
    const size_t d = A[0].size();
    std::vector<std::vector<Real>> M(d, std::vector<Real>(d + 1, Real(0)));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) {
            Real s(0);
            for (size_t r = 0; r < m; ++r) s += A[r][i] * A[r][j];
            M[i][j] = s;
        }
        Real s(0);
        for (size_t r = 0; r < m; ++r) s += A[r][i] * y[r];
        M[i][d] = s;
    }
    for (size_t col = 0; col < d; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < d; ++r) {
            if (abs(M[r][col]) > abs(M[piv][col])) piv = r;
        }
        if (M[piv][col] == 0) {
            throw std::runtime_error("fit: singular normal equations");
        }
        std::swap(M[col], M[piv]);
        for (size_t r = col + 1; r < d; ++r) {
            const Real f = M[r][col] / M[col][col];
            for (size_t cc = col; cc <= d; ++cc) M[r][cc] -= f * M[col][cc];
        }
    }
    std::vector<Real> b(d, Real(0));
    for (size_t i = d; i-- > 0;) {
        Real s = M[i][d];
        for (size_t j = i + 1; j < d; ++j) s -= M[i][j] * b[j];
        b[i] = s / M[i][i];
    }
    return b;
}

}  // namespace

Rational eigenvalue(long long k, long long n, const Rational& c) {
    check_level(k, n);
    if (c.sign() <= 0) {
        throw std::invalid_argument("eigenvalue: curvature c must be positive");
    }
    return Rational(k * (k + n)) * c;
}

Integer multiplicity(long long k, long long n) {
    check_level(k, n);
    const Integer a = binom_ext(n + k, k);
    const Integer b = binom_ext(n + k - 1, k - 1);
    return a * a - b * b;
}

HeatTraceResult heat_trace(const Real& t, long long n, const Rational& c,
                           const Real& eps, long long term_cap) {
    if (n < 1) throw std::out_of_range("heat_trace: need n >= 1");
    if (c.sign() <= 0) throw std::invalid_argument("heat_trace: c must be positive");
    if (t <= 0) throw std::invalid_argument("heat_trace: t must be positive");
    if (eps <= 0) throw std::invalid_argument("heat_trace: eps must be positive");

    const Real ct = to_real(c) * t;
    // E = exp(-k(k+n)ct) and D = exp(-(2k-1+n)ct) stepped by F = exp(-2ct):
    // eigenvalue gaps are arithmetic, so two multiplies advance a level.
    const Real F = Real(exp(Real(-2) * ct));
    Real D = Real(exp(Real(-(n - 1)) * ct));  // D_0; D_k = exp(-(2k-1+n)ct)
    Real E(1);                                // E_0; E_k = exp(-k(k+n)ct)

    HeatTraceResult out;
    out.value = 0;
    out.truncation_bound = std::numeric_limits<Real>::infinity();
    for (long long k = 0; k <= term_cap; ++k) {
        const Real term = to_real(multiplicity(k, n)) * E;
        if (k >= 1) {
            // Ratio majorant: term_{j+1}/term_j <= r_k for all j >= k, and
            // r monotonically decreases, so tail_{>=k} <= term_k/(1 - r_k).
            // The exponential factor exp(-(2k+1+n)ct) is D*F at this point.
            const Real kn = Real(k + n) / Real(k + 1);
            const Real r = kn * kn * Real(2 * k + n + 2) / Real(2 * k + n) * D * F;
            if (r < 1) {
                const Real bound = term / (Real(1) - r);
                out.truncation_bound = bound;
                if (bound <= eps) {
                    out.converged = true;
                    out.terms_used = k;  // levels 0 .. k-1 summed
                    return out;
                }
            }
        }
        out.value += term;
        D *= F;
        E *= D;
        out.terms_used = k + 1;
    }
    out.converged = false;
    return out;
}

Real pi_value() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.mpq().get_mpq_t(), MPFR_RNDN);
    return r;
}

Real to_real(const Integer& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real cpn_volume(long long n, const Rational& c) {
    if (n < 1) throw std::out_of_range("cpn_volume: need n >= 1");
    if (c.sign() <= 0) throw std::invalid_argument("cpn_volume: c must be positive");
    const Real base = Real(4) * pi_value() / to_real(c);
    return Real(pow(base, static_cast<int>(n))) / to_real(factorial(n));
}

HeatTraceFit fit_asymptotics(long long n, const Rational& c, int degree,
                             std::string_view t_min, std::string_view t_max,
                             int grid_size, unsigned digits) {
    if (n < 1) throw std::out_of_range("fit: need n >= 1");
    if (degree < 0 || degree > 16) {
        throw std::invalid_argument("fit: degree must be in [0, 16]");
    }
    if (grid_size < degree + 1) {
        throw std::invalid_argument("fit: grid_size must be >= degree + 1");
    }
    if (digits < 10) {
        throw std::invalid_argument("fit: need at least 10 working digits");
    }
    Real::default_precision(digits);

    const Real tmin{std::string(t_min)};
    const Real tmax{std::string(t_max)};
    if (!(tmin > 0) || !(tmin < tmax)) {
        throw std::invalid_argument("fit: need 0 < t_min < t_max");
    }

    HeatTraceFit fit;
    fit.n = n;
    fit.c = c;
    fit.degree = degree;
    fit.digits = digits;

    const Real ratio = grid_size > 1
                           ? Real(pow(tmax / tmin, Real(1) / Real(grid_size - 1)))
                           : Real(1);
    const Real eps{"1e-50"};
    const Real four_pi = Real(4) * pi_value();

    std::vector<Real> y(static_cast<size_t>(grid_size));
    fit.truncation_bound = 0;
    Real t = tmin;
    for (int j = 0; j < grid_size; ++j, t *= ratio) {
        const HeatTraceResult z = heat_trace(t, n, c, eps);
        if (!z.converged) {
            throw std::runtime_error(
                "fit: heat trace did not reach the tail target at t = " +
                t.str(8) + "; achieved bound " + z.truncation_bound.str(8));
        }
        if (z.truncation_bound > fit.truncation_bound) {
            fit.truncation_bound = z.truncation_bound;
        }
        fit.t_grid.push_back(t);
        y[static_cast<size_t>(j)] = z.value * Real(pow(four_pi * t, static_cast<int>(n)));
    }

    // Fit on u = t/t_max in (0, 1]; rescale coefficients afterwards.
    std::vector<std::vector<Real>> A(static_cast<size_t>(grid_size),
                                     std::vector<Real>(static_cast<size_t>(degree + 1)));
    for (size_t j = 0; j < A.size(); ++j) {
        const Real u = fit.t_grid[j] / tmax;
        Real up(1);
        for (int i = 0; i <= degree; ++i, up *= u) A[j][static_cast<size_t>(i)] = up;
    }
    const std::vector<Real> b = solve_least_squares(A, y);

    fit.fitted.resize(b.size());
    Real scale(1);
    for (size_t i = 0; i < b.size(); ++i, scale *= tmax) fit.fitted[i] = b[i] / scale;

    Real ss(0), ymax(0);
    for (size_t j = 0; j < A.size(); ++j) {
        Real pred(0);
        for (size_t i = 0; i < b.size(); ++i) pred += b[i] * A[j][i];
        const Real r = y[j] - pred;
        ss += r * r;
        if (abs(y[j]) > ymax) ymax = Real(abs(y[j]));
    }
    fit.fit_residual = Real(sqrt(ss / Real(grid_size)));
    fit.relative_residual = fit.fit_residual / ymax;
    fit.residual_ok = fit.relative_residual < Real("1e-6");
    return fit;
}

HeatTraceFit fit_asymptotics(long long n, const Rational& c) {
    return fit_asymptotics(n, c, 4, "1e-3", "1e-2", 24, 60);
}

}  // namespace kspec::cpn
