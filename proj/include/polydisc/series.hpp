#pragma once

#include "polydisc/polynomial.hpp"

namespace polydisc {

/// Power series truncated at a fixed total degree, with exact coefficients.
/// Arithmetic silently discards everything above the cap.
class TruncatedSeries {
public:
    using TermMap = Polynomial::TermMap;

    TruncatedSeries(int n, unsigned degree_cap) : n_(n), cap_(degree_cap) {}
    TruncatedSeries(const Polynomial& p, unsigned degree_cap);

    int nvars() const { return n_; }
    unsigned degree_cap() const { return cap_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GaussianRational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    void add_term(const Monomial& m, const GaussianRational& c);

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.n_ == b.n_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }

    /// Truncation of the series to a lower cap.
    TruncatedSeries truncated(unsigned cap) const;

    Polynomial to_polynomial() const { return Polynomial(n_, terms_); }

private:
    int n_;
    unsigned cap_;
    TermMap terms_;
};

/// Multiplicative inverse of f modulo total degree > D.  Requires a nonzero
/// constant term.
TruncatedSeries series_invert(const Polynomial& f, unsigned D);

}  // namespace polydisc
