#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kspec {

/// Arbitrary-precision integer. GMP does the heavy lifting.
using Integer = mpz_class;

/// Extended binomial coefficient C(u, v):
///   v < 0            -> 0
///   v = 0            -> 1 (for every u, including u < 0)
///   v > 0, 0 <= u < v -> 0
///   v > 0, u < 0     -> 0 (dead zone, kept so the function is total)
///   otherwise        -> u! / (v! (u-v)!)
Integer binom_ext(long long u, long long v);

/// n! as an Integer. factorial(0) = 1.
Integer factorial(unsigned long n);

/// Exact rational number. Always stored reduced with a positive
/// denominator; zero is 0/1, so equality is structural. Serializes as
/// "a/b", or just "a" when the denominator is 1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long long n) : q_(static_cast<long>(n)) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long long num, long long den)
        : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

    /// Parses "a/b" or "a" (optional leading sign, decimal digits).
    /// Throws std::invalid_argument on malformed input or zero denominator.
    static Rational parse(std::string_view s);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integral() const { return q_.get_den() == 1; }

    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c <=> 0;
    }

private:
    mpq_class q_;  // kept canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace kspec
