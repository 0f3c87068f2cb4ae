#include "polydisc/norm.hpp"

#include <mpfr.h>

#include "polydisc/polynomial.hpp"
#include "polydisc/series.hpp"

namespace polydisc {

namespace {

Rational mpfr_to_rational(mpfr_t x) {
    mpq_t q;
    mpq_init(q);
    mpfr_get_q(q, x);
    Rational r(q);
    mpq_clear(q);
    return r;
}

Rational sqrt_directed(const Rational& q, unsigned precision, mpfr_rnd_t rnd) {
    mpfr_t x;
    mpfr_init2(x, precision);
    mpfr_set_q(x, q.get_mpq_t(), rnd);
    if (mpfr_sgn(x) < 0) mpfr_set_zero(x, 1);  // downward rounding of tiny q
    mpfr_sqrt(x, x, rnd);
    Rational r = mpfr_to_rational(x);
    mpfr_clear(x);
    return r;
}

}  // namespace

Interval sqrt_enclosure(const Rational& q, unsigned precision) {
    if (q < 0) throw std::domain_error("sqrt_enclosure of negative rational");
    if (q == 0) return Interval::point(Rational(0));
    return {sqrt_directed(q, precision, MPFR_RNDD), sqrt_directed(q, precision, MPFR_RNDU)};
}

double NormValue::approx() const {
    if (exact) return exact->get_d();
    return (interval.lo.get_d() + interval.hi.get_d()) / 2.0;
}

NormValue abs_value(const GaussianRational& z, unsigned precision) {
    NormValue v;
    Rational a2 = z.abs_squared();
    v.exact = exact_sqrt(a2);
    v.interval = v.exact ? Interval::point(*v.exact) : sqrt_enclosure(a2, precision);
    return v;
}

namespace {

template <typename TermMap>
NormValue sum_of_abs(const TermMap& terms, unsigned precision) {
    NormValue total;
    total.exact = Rational(0);
    for (const auto& [m, c] : terms) {
        NormValue a = abs_value(c, precision);
        total.interval += a.interval;
        if (total.exact && a.exact)
            *total.exact += *a.exact;
        else
            total.exact.reset();
    }
    return total;
}

}  // namespace

NormValue norm_l1(const Polynomial& f, unsigned precision) {
    return sum_of_abs(f.terms(), precision);
}

NormValue series_norm_partial(const TruncatedSeries& s, unsigned precision) {
    return sum_of_abs(s.terms(), precision);
}

}  // namespace polydisc
