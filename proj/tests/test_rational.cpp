#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kspec/rational.hpp"

#include <random>
#include <sstream>

using kspec::binom_ext;
using kspec::factorial;
using kspec::Integer;
using kspec::Rational;

TEST_CASE("binom_ext conventions") {
    CHECK(binom_ext(16, 2) == 120);
    CHECK(binom_ext(14, -1) == 0);
    CHECK(binom_ext(12, 0) == 1);
    CHECK(binom_ext(0, 2) == 0);
    CHECK(binom_ext(0, 0) == 1);
    CHECK(binom_ext(-2, 0) == 1);   // v = 0 wins even for negative u
    CHECK(binom_ext(-2, -1) == 0);
    CHECK(binom_ext(-2, 3) == 0);   // dead zone: total, returns 0
    CHECK(binom_ext(5, 7) == 0);
    CHECK(binom_ext(600, 300) == binom_ext(600, 300));  // large args don't throw
}

TEST_CASE("binom_ext Pascal recurrence and symmetry") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> du(1, 120);
    for (int i = 0; i < 500; ++i) {
        const long long u = du(rng);
        std::uniform_int_distribution<long long> dv(1, u);
        const long long v = dv(rng);
        CHECK(binom_ext(u, v) == binom_ext(u - 1, v - 1) + binom_ext(u - 1, v));
        CHECK(binom_ext(u, v) == binom_ext(u, u - v));
    }
    // row sums: sum_v C(u,v) == 2^u
    for (long long u = 0; u <= 40; ++u) {
        Integer sum(0);
        for (long long v = 0; v <= u; ++v) sum += binom_ext(u, v);
        Integer pow2(1);
        pow2 <<= static_cast<unsigned>(u);
        CHECK(sum == pow2);
    }
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("rational ring examples") {
    CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(0) == Rational(0));
    CHECK((Rational(2, 3) * Rational(0)).numerator() == 0);
    CHECK((Rational(2, 3) * Rational(0)).denominator() == 1);
    CHECK(Rational(-13, 1680) < Rational(0));
    CHECK(Rational(1, 3) > Rational(0));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("rationals are stored reduced with positive denominator") {
    const Rational a(Integer(6), Integer(-4));
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(Rational(351, 1680).numerator() == 117);
    CHECK(Rational(351, 1680).denominator() == 560);
    CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("division by zero is an error, never a crash") {
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

namespace {

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("ring axioms hold exactly on random rationals") {
    std::mt19937 rng(987654321);
    for (int i = 0; i < 400; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) {
            CHECK(a / a == Rational(1));
            CHECK((b / a) * a == b);
        }
        // order consistent with subtraction sign
        CHECK(((a < b) ? 1 : 0) == (((b - a).sign() > 0) ? 1 : 0));
    }
}

TEST_CASE("serialization round trip") {
    CHECK(Rational(-13, 1680).str() == "-13/1680");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK(Rational::parse("-13/1680") == Rational(-13, 1680));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("6/-4") == Rational(-3, 2));  // normalized on input

    std::mt19937 rng(1234);
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_rational(rng);
        CHECK(Rational::parse(a.str()) == a);
    }

    std::ostringstream os;
    os << Rational(117, 560);
    CHECK(os.str() == "117/560");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1 2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(" 12"), std::invalid_argument);
}
