#include "kspec/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace kspec {

Integer binom_ext(long long u, long long v) {
    if (v < 0) return Integer(0);
    if (v == 0) return Integer(1);
    if (u < 0 || u < v) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(u),
                 static_cast<unsigned long>(v));
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (sgn(den) == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    const auto bad = [&] {
        return std::invalid_argument("Rational::parse: malformed rational '" +
                                     std::string(s) + "'");
    };
    // mpz_set_str skips whitespace anywhere in its input; don't inherit that.
    for (const char ch : s) {
        if (std::isspace(static_cast<unsigned char>(ch))) throw bad();
    }
    const auto slash = s.find('/');
    const std::string num_part(s.substr(0, slash));
    Integer num, den(1);
    if (mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0) throw bad();
    if (slash != std::string_view::npos) {
        const std::string den_part(s.substr(slash + 1));
        if (mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0) throw bad();
        if (sgn(den) == 0) throw bad();
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    std::string out = q_.get_num().get_str();
    if (q_.get_den() != 1) {
        out += '/';
        out += q_.get_den().get_str();
    }
    return out;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace kspec
