#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "polydisc/monomial.hpp"
#include "polydisc/rational.hpp"

namespace polydisc {

/// Sparse multivariate polynomial over the Gaussian rationals.  Zero
/// coefficients are never stored, so equality is equality of term maps.
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    explicit Polynomial(int n = 0) : n_(n) {}
    Polynomial(int n, TermMap terms) : n_(n), terms_(std::move(terms)) { prune(); }

    static Polynomial constant(int n, GaussianRational c);
    static Polynomial variable(int n, int j);  // X_{j+1}, zero-based j
    static Polynomial term(int n, Monomial m, GaussianRational c);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    GaussianRational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }
    GaussianRational constant_term() const { return coeff(mono_one(n_)); }

    unsigned degree() const;         // total degree, 0 for the zero polynomial
    unsigned degree_in(int j) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const GaussianRational& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    GaussianRational evaluate(const std::vector<GaussianRational>& z) const;

    /// Substitute X_j -> c * X_j (zero-based j).  Unit-modulus c preserves the
    /// l1 norm coefficientwise.
    Polynomial scale_variable(int j, const GaussianRational& c) const;

    /// Substitute the exact value c for X_j; the result still lives in n vars.
    Polynomial substitute_value(int j, const GaussianRational& c) const;

    Polynomial partial_derivative(int j, unsigned order = 1) const;

    /// Add a fresh variable as index 0 (shifting the rest) or as index n.
    Polynomial prepend_variable() const;
    Polynomial append_variable() const;
    /// Inverse of prepend_variable for polynomials not involving variable 0.
    Polynomial drop_first_variable() const;

    bool involves(int j) const;

    std::pair<Monomial, GaussianRational> leading_term(const MonomialOrder& order) const;

    void add_term(const Monomial& m, const GaussianRational& c);

private:
    void prune();

    int n_;
    TermMap terms_;
};

/// Quotient of an exact division, or nothing when g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace polydisc
