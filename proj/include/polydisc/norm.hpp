#pragma once

#include <optional>

#include "polydisc/rational.hpp"

namespace polydisc {

class Polynomial;
class TruncatedSeries;

/// Closed interval with exact rational endpoints.  Endpoints produced by
/// directed MPFR rounding at a stated working precision, so widths shrink as
/// the precision grows.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() : lo(0), hi(0) {}
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
    static Interval point(const Rational& q) { return {q, q}; }

    Rational width() const { return hi - lo; }
    bool certainly_less(const Rational& q) const { return hi < q; }
    bool certainly_greater(const Rational& q) const { return lo > q; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }

    Interval& operator+=(const Interval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }
};

/// Outward-rounded enclosure of sqrt(q) at `precision` bits; q must be >= 0.
Interval sqrt_enclosure(const Rational& q, unsigned precision);

/// Result of an l1-norm computation: always an enclosure, and the exact value
/// whenever every coefficient modulus is rational.
struct NormValue {
    std::optional<Rational> exact;
    Interval interval;

    bool is_exact() const { return exact.has_value(); }
    double approx() const;
};

/// Enclosure (and exact value when |z| is rational) of |z|.
NormValue abs_value(const GaussianRational& z, unsigned precision = 128);

NormValue norm_l1(const Polynomial& f, unsigned precision = 128);
NormValue series_norm_partial(const TruncatedSeries& s, unsigned precision = 128);

}  // namespace polydisc
