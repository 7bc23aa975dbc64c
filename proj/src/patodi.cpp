#include "kspec/patodi.hpp"

#include <stdexcept>
#include <string>

namespace kspec::patodi {

namespace {

void check_range(long long p, long long n) {
    // cap keeps n*(n+1) etc. inside long long (and any larger n is far past
    // what the binomials can realistically be evaluated at anyway)
    if (n > (1ll << 31)) {
        throw std::out_of_range("patodi: n too large");
    }
    if (n < 1 || p < 0 || p > 2 * n) {
        throw std::out_of_range("patodi: need n >= 1 and 0 <= p <= 2n, got p=" +
                                std::to_string(p) + " n=" + std::to_string(n));
    }
}

PatodiCoefficients eval_lines(long long p, long long n) {
    const Rational b0(binom_ext(2 * n, p));
    const Rational b1(binom_ext(2 * n - 2, p - 1));
    const Rational b2(binom_ext(2 * n - 4, p - 2));

    PatodiCoefficients out;
    out.p = p;
    out.n = n;
    out.lambda1 = b0 / 180 - b1 / 12 + b2 / 2;
    out.lambda2 = b1 / 2 - b0 / 180 - b2 * 2;
    out.lambda3 = b0 / 72 - b1 / 6 + b2 / 2;
    return out;
}

}  // namespace

long long canonical_p(long long p, long long n) {
    check_range(p, n);
    return std::min(p, 2 * n - p);
}

PatodiCoefficients lambda_coefficients(long long p, long long n) {
    return eval_lines(canonical_p(p, n), n);
}

PatodiCoefficients lambda_coefficients_raw(long long p, long long n) {
    check_range(p, n);
    return eval_lines(p, n);
}

Rational a0(long long p, long long n, const Rational& vol) {
    check_range(p, n);
    if (vol.sign() <= 0) {
        throw std::invalid_argument("a0: volume must be positive");
    }
    return Rational(binom_ext(2 * n, p)) * vol;
}

Rational a1_coefficient(long long p, long long n) {
    check_range(p, n);
    const Rational prefactor(factorial(2 * n - 2),
                             factorial(p) * factorial(2 * n - p));
    const Integer P(static_cast<long>(p)), N(static_cast<long>(n));
    // p^2 - 2np + n(2n-1)/3 == (3p^2 - 6np + 2n^2 - n) / 3
    const Rational bracket(3 * P * P - 6 * N * P + 2 * N * N - N, Integer(3));
    return prefactor * bracket;
}

Rational a2_general(long long p, long long n, const CurvatureIntegrals& integrals) {
    if (integrals.int_s2.sign() < 0 || integrals.int_ric2.sign() < 0 ||
        integrals.int_B2.sign() < 0) {
        throw std::invalid_argument("a2_general: curvature integrals are squared "
                                    "norms and must be >= 0");
    }
    const PatodiCoefficients l = lambda_coefficients(p, n);
    const Rational s_coeff = Rational(2, n * (n + 1)) * l.lambda1 +
                             Rational(1, 2 * n) * l.lambda2 + l.lambda3;
    const Rational ric_coeff = Rational(16, n + 2) * l.lambda1 + l.lambda2 * 2;
    const Rational b_coeff = l.lambda1 * 4;
    return s_coeff * integrals.int_s2 + ric_coeff * integrals.int_ric2 +
           b_coeff * integrals.int_B2;
}

Rational a2_const_hsc(long long p, long long n, const Rational& c, const Rational& vol) {
    if (vol.sign() <= 0) {
        throw std::invalid_argument("a2_const_hsc: volume must be positive");
    }
    const Rational s = Rational(n * (n + 1)) * c;  // scalar curvature
    return a2_general(p, n, CurvatureIntegrals{s * s * vol, Rational(0), Rational(0)});
}

HeatInvariants heat_invariants_const_hsc(long long p, long long n,
                                         const Rational& c, const Rational& vol) {
    HeatInvariants out;
    out.p = canonical_p(p, n);
    out.n = n;
    out.a0 = a0(p, n, vol);
    const Rational s = Rational(n * (n + 1)) * c;
    out.a1 = a1_coefficient(p, n) * s * vol;
    out.a2 = a2_const_hsc(p, n, c, vol);
    return out;
}

Rational reduced_a2_coefficient(long long p, long long n) {
    const PatodiCoefficients l = lambda_coefficients(p, n);
    return Rational(4 * n + 2, (n + 1) * (n + 2)) * l.lambda1 +
           l.lambda2 / 2 + l.lambda3;
}

NumericalCondition numerical_condition(long long p, long long n) {
    const PatodiCoefficients l = lambda_coefficients(p, n);
    NumericalCondition out;
    out.lambda1 = l.lambda1;
    out.reduced_coeff = Rational(4 * n + 2, (n + 1) * (n + 2)) * l.lambda1 +
                        l.lambda2 / 2 + l.lambda3;
    out.holds = out.reduced_coeff.sign() > 0 && out.lambda1.sign() > 0;
    return out;
}

std::vector<std::pair<long long, long long>> duality_mismatches(long long max_n) {
    std::vector<std::pair<long long, long long>> bad;
    const Rational vol(1);
    for (long long n = 2; n <= max_n; ++n) {
        for (long long p = 0; p <= n; ++p) {
            const long long q = 2 * n - p;
            const PatodiCoefficients a = lambda_coefficients_raw(p, n);
            const PatodiCoefficients b = lambda_coefficients_raw(q, n);
            if (a.lambda1 != b.lambda1 || a.lambda2 != b.lambda2 ||
                a.lambda3 != b.lambda3 ||
                a1_coefficient(p, n) != a1_coefficient(q, n) ||
                a0(p, n, vol) != a0(q, n, vol)) {
                bad.emplace_back(p, n);
            }
        }
    }
    return bad;
}

std::vector<std::pair<long long, long long>> reduction_identity_mismatches(long long max_n) {
    std::vector<std::pair<long long, long long>> bad;
    for (long long n = 1; n <= max_n; ++n) {
        for (long long p = 0; p <= 2 * n; ++p) {
            const PatodiCoefficients l = lambda_coefficients(p, n);
            const Rational lhs =
                Rational(2, n * (n + 1)) * l.lambda1 + Rational(1, 2 * n) * l.lambda2 +
                l.lambda3 +
                (Rational(16, n + 2) * l.lambda1 + l.lambda2 * 2) *
                    Rational(n - 1, 4 * n);
            if (lhs != reduced_a2_coefficient(p, n)) bad.emplace_back(p, n);
        }
    }
    return bad;
}

}  // namespace kspec::patodi
