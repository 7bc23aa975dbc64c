#include "kspec/diophantine.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace kspec::dioph {

Rational quadratic_value(const Integer& p, const Integer& n) {
    return Rational(quadratic_integer_form(p, n), Integer(3));
}

Rational quadratic_value(long long p, long long n) {
    return quadratic_value(Integer(static_cast<long>(p)), Integer(static_cast<long>(n)));
}

Integer quadratic_integer_form(const Integer& p, const Integer& n) {
    return 3 * p * p - 6 * n * p + 2 * n * n - n;
}

bool is_degenerate(const Integer& p, const Integer& n) {
    return sgn(quadratic_integer_form(p, n)) == 0;
}

bool is_degenerate(long long p, long long n) {
    return is_degenerate(Integer(static_cast<long>(p)), Integer(static_cast<long>(n)));
}

std::pair<Integer, Integer> next_pair(const Integer& p, const Integer& n) {
    return {8 * n - 5 * p + 1, 19 * n - 12 * p + 3};
}

std::vector<ExceptionalPair> enumerate_recursive(long long count) {
    if (count < 1) {
        throw std::invalid_argument("enumerate_recursive: count must be >= 1");
    }
    std::vector<ExceptionalPair> out;
    out.reserve(static_cast<size_t>(count));
    Integer p(1), n(3);
    for (long long k = 1; k <= count; ++k) {
        if (!is_degenerate(p, n)) {
            throw std::logic_error(
                "enumerate_recursive: pair k=" + std::to_string(k) + " (" +
                p.get_str() + ", " + n.get_str() +
                ") violates the quadratic; recurrence implementation is broken");
        }
        out.push_back(ExceptionalPair{k, p, n});
        std::tie(p, n) = next_pair(p, n);
    }
    return out;
}

std::vector<ExceptionalPair> enumerate_recursive_up_to(long long max_n) {
    std::vector<ExceptionalPair> out;
    const Integer limit(static_cast<long>(max_n));
    Integer p(1), n(3);
    for (long long k = 1; n <= limit; ++k) {
        if (!is_degenerate(p, n)) {
            throw std::logic_error("enumerate_recursive_up_to: recurrence output "
                                   "violates the quadratic");
        }
        out.push_back(ExceptionalPair{k, p, n});
        std::tie(p, n) = next_pair(p, n);
    }
    return out;
}

namespace detail {

unsigned long long isqrt_u64(unsigned long long x) {
    if (x == 0) return 0;
    // Newton iteration from an over-estimate; monotonically decreasing,
    // pure integer arithmetic.
    const int bits = std::bit_width(x);
    unsigned long long g = 1ull << ((bits + 1) / 2);
    for (;;) {
        const unsigned long long next = (g + x / g) / 2;
        if (next >= g) break;
        g = next;
    }
    return g;
}

namespace {

// Quadratic residues mod 64: cheap reject for non-squares.
constexpr std::array<bool, 64> make_square_mod64() {
    std::array<bool, 64> t{};
    for (int i = 0; i < 64; ++i) t[(i * i) & 63] = true;
    return t;
}
constexpr auto kSquareMod64 = make_square_mod64();

}  // namespace

std::vector<ExceptionalPair> bruteforce_u64(unsigned long long max_n) {
    std::vector<ExceptionalPair> out;
    long long k = 0;
    for (unsigned long long n = 1; n <= max_n; ++n) {
        const unsigned long long m = n * (n + 1);
        if (m % 3 != 0) continue;
        const unsigned long long q = m / 3;
        if (!kSquareMod64[q & 63]) continue;
        const unsigned long long s = isqrt_u64(q);
        if (s * s != q) continue;
        // roots are n +- s; the p <= n branch is n - s (s < n for n >= 1)
        out.push_back(ExceptionalPair{++k, Integer(static_cast<unsigned long>(n - s)),
                                      Integer(static_cast<unsigned long>(n))});
    }
    return out;
}

std::vector<ExceptionalPair> bruteforce_mpz(long long max_n) {
    std::vector<ExceptionalPair> out;
    long long k = 0;
    Integer m, q, s;
    const Integer limit(static_cast<long>(max_n));
    for (Integer n(1); n <= limit; ++n) {
        m = n * (n + 1);
        if (!mpz_divisible_ui_p(m.get_mpz_t(), 3)) continue;
        mpz_divexact_ui(q.get_mpz_t(), m.get_mpz_t(), 3);
        if (!mpz_perfect_square_p(q.get_mpz_t())) continue;
        mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
        out.push_back(ExceptionalPair{++k, Integer(n - s), n});
    }
    return out;
}

}  // namespace detail

std::vector<ExceptionalPair> enumerate_bruteforce(long long max_n) {
    if (max_n < 1) {
        throw std::invalid_argument("enumerate_bruteforce: max_n must be >= 1");
    }
    // n(n+1) stays below 2^64 up to ~4.2e9; use the fast path there.
    if (max_n <= 4'000'000'000ll) {
        return detail::bruteforce_u64(static_cast<unsigned long long>(max_n));
    }
    return detail::bruteforce_mpz(max_n);
}

}  // namespace kspec::dioph
