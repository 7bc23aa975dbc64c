#pragma once

#include "kspec/rational.hpp"

#include <utility>
#include <vector>

namespace kspec::dioph {

// The family of pairs (p, n), p <= n, on which the a_1 heat invariant
// carries no information: positive integer solutions of
//   p^2 - 2np + n(2n-1)/3 = 0.
// Two independent generators are provided: the closed-form recurrence and a
// direct per-n scan. They must agree; tests and `verify pairs` enforce it.

struct ExceptionalPair {
    long long k = 0;  // 1-based index in increasing order
    Integer p, n;
    friend bool operator==(const ExceptionalPair&, const ExceptionalPair&) = default;
};

/// Exact value of p^2 - 2np + n(2n-1)/3.
Rational quadratic_value(const Integer& p, const Integer& n);
Rational quadratic_value(long long p, long long n);

/// Denominator-cleared form 3p^2 - 6np + 2n^2 - n; zero exactly on solutions.
Integer quadratic_integer_form(const Integer& p, const Integer& n);

/// True iff (p, n) solves the quadratic exactly.
bool is_degenerate(const Integer& p, const Integer& n);
bool is_degenerate(long long p, long long n);

/// One step of the recurrence:
///   p' = 8n - 5p + 1,  n' = 19n - 12p + 3.
/// Preserves the quadratic's integer form identically (not just on zeros).
std::pair<Integer, Integer> next_pair(const Integer& p, const Integer& n);

/// First `count` pairs starting from (1, 3) via the recurrence. Every
/// generated pair is checked against the integer quadratic; a violation
/// is an implementation bug and throws std::logic_error.
std::vector<ExceptionalPair> enumerate_recursive(long long count);

/// All pairs with n <= max_n via the recurrence (possibly empty).
std::vector<ExceptionalPair> enumerate_recursive_up_to(long long max_n);

/// Independent oracle: for each n <= max_n, a solution with p <= n exists
/// iff n(n+1)/3 is a perfect square, in which case p = n - sqrt(n(n+1)/3).
/// Perfect squares are detected with exact integer square roots.
std::vector<ExceptionalPair> enumerate_bruteforce(long long max_n);

namespace detail {
/// Exact floor square root, integer arithmetic only.
unsigned long long isqrt_u64(unsigned long long x);
/// Forceable slow path over GMP integers (cross-checked against the
/// 64-bit fast path in tests).
std::vector<ExceptionalPair> bruteforce_mpz(long long max_n);
std::vector<ExceptionalPair> bruteforce_u64(unsigned long long max_n);
}  // namespace detail

}  // namespace kspec::dioph
