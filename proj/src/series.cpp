#include "polydisc/series.hpp"

namespace polydisc {

TruncatedSeries::TruncatedSeries(const Polynomial& p, unsigned degree_cap)
    : n_(p.nvars()), cap_(degree_cap) {
    for (const auto& [m, c] : p.terms())
        if (total_degree(m) <= cap_) terms_.emplace(m, c);
}

void TruncatedSeries::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero() || total_degree(m) > cap_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (n_ != o.n_) throw std::invalid_argument("series arity mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (n_ != o.n_) throw std::invalid_argument("series arity mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("series arity mismatch");
    TruncatedSeries r(a.n_, std::min(a.cap_, b.cap_));
    for (const auto& [ma, ca] : a.terms_) {
        unsigned da = total_degree(ma);
        if (da > r.cap_) continue;
        for (const auto& [mb, cb] : b.terms_) {
            if (da + total_degree(mb) > r.cap_) continue;
            r.add_term(mono_mul(ma, mb), ca * cb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated(unsigned cap) const {
    TruncatedSeries r(n_, cap);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) <= cap) r.terms_.emplace(m, c);
    return r;
}

TruncatedSeries series_invert(const Polynomial& f, unsigned D) {
    GaussianRational c0 = f.constant_term();
    if (c0.is_zero()) throw std::domain_error("series_invert: zero constant term");

    // f = c0 (1 - u) with ord(u) >= 1, so 1/f = (1/c0) sum u^k, k <= D.
    Polynomial u = Polynomial::constant(f.nvars(), GaussianRational(1)) - f.scaled(GaussianRational(1) / c0);
    TruncatedSeries us(u, D);
    TruncatedSeries acc(Polynomial::constant(f.nvars(), GaussianRational(1)), D);
    TruncatedSeries upow = acc;
    for (unsigned k = 1; k <= D && !upow.is_zero(); ++k) {
        upow = upow * us;
        acc += upow;
    }
    TruncatedSeries inv(f.nvars(), D);
    for (const auto& [m, c] : acc.terms()) inv.add_term(m, c / c0);
    return inv;
}

}  // namespace polydisc
