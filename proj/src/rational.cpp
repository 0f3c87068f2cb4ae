#include "polydisc/rational.hpp"

#include <sstream>

namespace polydisc {

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    const Integer num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);  // already canonical: gcd(num,den)=1 carries over
}

GaussianRational gr_pow(GaussianRational base, unsigned long e) {
    GaussianRational r(1);
    while (e > 0) {
        if (e & 1ul) r *= base;
        e >>= 1ul;
        if (e > 0) base *= base;
    }
    return r;
}

std::optional<Rational> exact_abs(const GaussianRational& z) {
    return exact_sqrt(z.abs_squared());
}

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << '/' << q.get_den();
    return os.str();
}

std::string to_string(const GaussianRational& z) {
    if (z.is_real()) return to_string(z.re);
    std::string s = "(" + to_string(z.re);
    s += z.im >= 0 ? "+" : "-";
    s += to_string(abs(z.im)) + "i)";
    return s;
}

}  // namespace polydisc
