#include "polydisc/polynomial.hpp"

namespace polydisc {

Polynomial Polynomial::constant(int n, GaussianRational c) {
    Polynomial p(n);
    if (!c.is_zero()) p.terms_.emplace(mono_one(n), std::move(c));
    return p;
}

Polynomial Polynomial::variable(int n, int j) {
    if (j < 0 || j >= n) throw std::invalid_argument("variable index out of range");
    Monomial m = mono_one(n);
    m[static_cast<size_t>(j)] = 1;
    return term(n, std::move(m), GaussianRational(1));
}

Polynomial Polynomial::term(int n, Monomial m, GaussianRational c) {
    if (static_cast<int>(m.size()) != n) throw std::invalid_argument("monomial arity mismatch");
    Polynomial p(n);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

void Polynomial::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

unsigned Polynomial::degree_in(int j) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<size_t>(j)]);
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("polynomial arity mismatch");
    Polynomial r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(n_, GaussianRational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

GaussianRational Polynomial::evaluate(const std::vector<GaussianRational>& z) const {
    if (static_cast<int>(z.size()) != n_) throw std::invalid_argument("evaluate: point arity mismatch");
    GaussianRational acc;
    for (const auto& [m, c] : terms_) {
        GaussianRational t = c;
        for (size_t j = 0; j < m.size(); ++j)
            if (m[j] > 0) t *= gr_pow(z[j], m[j]);
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::scale_variable(int j, const GaussianRational& c) const {
    if (j < 0 || j >= n_) throw std::invalid_argument("scale_variable: index out of range");
    Polynomial r(n_);
    for (const auto& [m, v] : terms_) {
        unsigned e = m[static_cast<size_t>(j)];
        r.add_term(m, e == 0 ? v : v * gr_pow(c, e));
    }
    return r;
}

Polynomial Polynomial::substitute_value(int j, const GaussianRational& c) const {
    if (j < 0 || j >= n_) throw std::invalid_argument("substitute_value: index out of range");
    Polynomial r(n_);
    for (const auto& [m, v] : terms_) {
        unsigned e = m[static_cast<size_t>(j)];
        Monomial mm = m;
        mm[static_cast<size_t>(j)] = 0;
        r.add_term(mm, e == 0 ? v : v * gr_pow(c, e));
    }
    return r;
}

Polynomial Polynomial::partial_derivative(int j, unsigned order) const {
    if (j < 0 || j >= n_) throw std::invalid_argument("partial_derivative: index out of range");
    Polynomial cur = *this;
    for (unsigned k = 0; k < order; ++k) {
        Polynomial next(n_);
        for (const auto& [m, c] : cur.terms_) {
            unsigned e = m[static_cast<size_t>(j)];
            if (e == 0) continue;
            Monomial mm = m;
            mm[static_cast<size_t>(j)] = e - 1;
            next.add_term(mm, c * GaussianRational(static_cast<long>(e)));
        }
        cur = std::move(next);
    }
    return cur;
}

Polynomial Polynomial::prepend_variable() const {
    Polynomial r(n_ + 1);
    for (const auto& [m, c] : terms_) {
        Monomial mm;
        mm.reserve(m.size() + 1);
        mm.push_back(0);
        mm.insert(mm.end(), m.begin(), m.end());
        r.terms_.emplace(std::move(mm), c);
    }
    return r;
}

Polynomial Polynomial::append_variable() const {
    Polynomial r(n_ + 1);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        mm.push_back(0);
        r.terms_.emplace(std::move(mm), c);
    }
    return r;
}

Polynomial Polynomial::drop_first_variable() const {
    Polynomial r(n_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m[0] != 0) throw std::logic_error("drop_first_variable: variable present");
        r.terms_.emplace(Monomial(m.begin() + 1, m.end()), c);
    }
    return r;
}

bool Polynomial::involves(int j) const {
    for (const auto& [m, c] : terms_)
        if (m[static_cast<size_t>(j)] > 0) return true;
    return false;
}

std::pair<Monomial, GaussianRational> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) return std::nullopt;
    MonomialOrder order = MonomialOrder::grevlex(f.nvars());
    Polynomial rem = f;
    Polynomial q(f.nvars());
    auto [gm, gc] = g.leading_term(order);
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading_term(order);
        if (!mono_divides(gm, rm)) return std::nullopt;
        Polynomial t = Polynomial::term(f.nvars(), mono_div(rm, gm), rc / gc);
        q += t;
        rem -= t * g;
    }
    return q;
}

}  // namespace polydisc
