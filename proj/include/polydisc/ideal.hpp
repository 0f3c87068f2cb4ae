#pragma once

#include <map>
#include <vector>

#include "polydisc/polynomial.hpp"

namespace polydisc {

/// Remainder of f under full division by basis (tail-reduced).  basis must
/// consist of monic polynomials; any set works, but the result is canonical
/// only for a reduced Groebner basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

/// Ideal of C[X1..Xn] given by generators, with cached reduced Groebner
/// bases per monomial order.  Values are immutable apart from the write-once
/// cache; do not share a value across threads during its first basis
/// computation.
class Ideal {
public:
    explicit Ideal(int n) : n_(n) {}
    Ideal(int n, std::vector<Polynomial> gens);

    static Ideal unit(int n) { return Ideal(n, {Polynomial::constant(n, GaussianRational(1))}); }
    static Ideal principal(Polynomial f) {
        int n = f.nvars();
        return Ideal(n, {std::move(f)});
    }

    int nvars() const { return n_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order) const;
    const std::vector<Polynomial>& groebner_basis() const {
        return groebner_basis(MonomialOrder::grevlex(n_));
    }

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
    bool contains(const Ideal& other) const;

    bool is_zero() const { return groebner_basis().empty(); }
    bool is_one() const;

    /// Staircase criterion: the quotient algebra is finite dimensional.
    bool is_zero_dimensional() const;
    /// dim_C of the quotient; throws unless zero dimensional.
    unsigned codimension() const;

private:
    int n_;
    std::vector<Polynomial> gens_;
    mutable std::map<MonomialOrder, std::vector<Polynomial>> cache_;
};

bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// Ideal quotient a : b, via intersection with each principal part of b.
Ideal ideal_colon(const Ideal& a, const Ideal& b);

/// Rabinowitsch test: g in Rad(I), decided by 1 in I + (1 - T g).
bool radical_contains(const Ideal& I, const Polynomial& g);

}  // namespace polydisc
