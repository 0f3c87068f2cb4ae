#include "polydisc/variety.hpp"

namespace polydisc {

CirclePosition CoordValue::position_checked() const {
    if (exact) return circle_position(value);
    auto p = circle_position(value, radius);
    if (!p)
        throw std::runtime_error(
            "boundary-ambiguous coordinate: certified interval straddles the unit circle");
    return *p;
}

std::optional<CirclePosition> CoordValue::position() const {
    if (exact) return circle_position(value);
    return circle_position(value, radius);
}

Ideal maximal_ideal_power(const Point& z, unsigned r) {
    int n = z.dim();
    std::vector<Polynomial> lin;
    for (int j = 0; j < n; ++j)
        lin.push_back(Polynomial::variable(n, j) - Polynomial::constant(n, z.coords[static_cast<size_t>(j)]));

    std::vector<Polynomial> gens;
    std::vector<unsigned> alpha(static_cast<size_t>(n), 0);
    // all exponent tuples of total degree r
    auto rec = [&](auto&& self, int j, unsigned remaining) -> void {
        if (j == n - 1) {
            alpha[static_cast<size_t>(j)] = remaining;
            Polynomial g = Polynomial::constant(n, GaussianRational(1));
            for (int k = 0; k < n; ++k)
                if (alpha[static_cast<size_t>(k)] > 0) g *= lin[static_cast<size_t>(k)].pow(alpha[static_cast<size_t>(k)]);
            gens.push_back(std::move(g));
            return;
        }
        for (unsigned a = 0; a <= remaining; ++a) {
            alpha[static_cast<size_t>(j)] = a;
            self(self, j + 1, remaining - a);
        }
    };
    if (n == 0) throw std::invalid_argument("maximal_ideal_power: empty point");
    rec(rec, 0, r);
    return Ideal(n, std::move(gens));
}

Ideal primary_component_at(const Ideal& I, const Point& z, unsigned* radius_out) {
    if (!I.is_zero_dimensional())
        throw std::domain_error("primary_component_at: ideal is not zero-dimensional");
    std::vector<GaussianRational> zi = z.coords;
    for (const auto& g : I.generators())
        if (!g.evaluate(zi).is_zero())
            throw std::domain_error("primary_component_at: point is not in the variety");

    constexpr unsigned kCap = 64;
    Ideal prev = ideal_sum(I, maximal_ideal_power(z, 1));
    for (unsigned r = 1; r + 2 <= kCap; ++r) {
        Ideal next = ideal_sum(I, maximal_ideal_power(z, r + 1));
        if (ideal_equal(prev, next)) {
            Ideal confirm = ideal_sum(I, maximal_ideal_power(z, r + 2));
            if (ideal_equal(next, confirm)) {
                if (radius_out) *radius_out = r;
                return Ideal(I.nvars(), prev.groebner_basis());
            }
        }
        prev = std::move(next);
    }
    throw std::runtime_error("primary_component_at: stabilization cap (r = 64) exceeded");
}

namespace {

// the unique element of a reduced lex basis that involves only variable j
UPoly eliminant(const Ideal& I, int j) {
    MonomialOrder order = MonomialOrder::lex_keeping(I.nvars(), j);
    for (const auto& b : I.groebner_basis(order)) {
        bool only_j = true;
        for (int k = 0; k < I.nvars(); ++k)
            if (k != j && b.involves(k)) only_j = false;
        if (only_j) return extract_univariate(b, j);
    }
    throw std::logic_error("eliminant not found (ideal not zero-dimensional?)");
}

CoordValue coord_of(const UnivariateRoot& r) {
    return r.exact ? CoordValue::make_exact(r.value) : CoordValue::make_disc(r.value, r.radius);
}

// fiber of the ideal over an exact value of variable j: gcd of the
// substituted generators, univariate in the other variable
UPoly exact_fiber(const Ideal& I, int j, int other, const GaussianRational& v) {
    UPoly fiber;
    for (const auto& g : I.groebner_basis()) {
        Polynomial s = g.substitute_value(j, v);
        if (s.is_zero()) continue;
        UPoly u = extract_univariate(s, other);
        fiber = fiber.empty() ? upoly_monic(u) : upoly_gcd(fiber, u);
        if (upoly_degree(fiber) == 0) break;
    }
    if (fiber.empty()) throw std::runtime_error("variety enumeration failure: zero fiber");
    return fiber;
}

}  // namespace

std::vector<VarietyPoint> variety_points(const Ideal& I, unsigned max_denominator) {
    if (!I.is_zero_dimensional())
        throw std::domain_error("variety_points: ideal is not zero-dimensional");
    int n = I.nvars();
    std::vector<VarietyPoint> points;
    if (I.is_one()) return points;
    unsigned total = I.codimension();

    if (n == 1) {
        const auto& basis = I.groebner_basis();
        if (basis.size() != 1) throw std::logic_error("univariate zero-dimensional basis not principal");
        for (const auto& r : isolate_roots(extract_univariate(basis[0], 0), max_denominator)) {
            VarietyPoint p;
            p.coords.push_back(coord_of(r));
            p.multiplicity = static_cast<unsigned>(r.multiplicity);
            points.push_back(std::move(p));
        }
    } else if (n == 2) {
        UPoly p2 = eliminant(I, 1);
        auto roots2 = isolate_roots(p2, max_denominator);

        // shape element X1 - q(X2) of the lex basis, when present
        MonomialOrder lex12 = MonomialOrder::lex_keeping(2, 1);
        const auto& lexbasis = I.groebner_basis(lex12);
        std::optional<UPoly> shape_q;
        if (lexbasis.size() == 2) {
            for (const auto& b : lexbasis) {
                Monomial lt = b.leading_term(lex12).first;
                if (lt[0] == 1 && lt[1] == 0) {
                    Polynomial tail = Polynomial::variable(2, 0) - b;
                    if (!tail.involves(0)) shape_q = extract_univariate(tail, 1);
                }
            }
        }

        for (const auto& r2 : roots2) {
            if (r2.exact) {
                UPoly fiber = exact_fiber(I, 1, 0, r2.value);
                for (const auto& r1 : isolate_roots(fiber, max_denominator)) {
                    VarietyPoint p;
                    p.coords.push_back(coord_of(r1));
                    p.coords.push_back(CoordValue::make_exact(r2.value));
                    p.multiplicity = static_cast<unsigned>(r1.multiplicity * r2.multiplicity);
                    points.push_back(std::move(p));
                }
            } else if (shape_q) {
                // X1 = q(X2) maps the certified disc of z2 through exact q
                const UPoly& q = *shape_q;
                GaussianRational center = upoly_eval(q, r2.value);
                // |q(z2) - q(c2)| <= r * sup |q'| on the disc
                Rational cu = abs_upper_bound(r2.value) + r2.radius;
                Rational dbound(0);
                UPoly dq = upoly_derivative(q);
                Rational powc(1);
                for (size_t e = 0; e < dq.size(); ++e) {
                    dbound += abs_upper_bound(dq[e]) * powc;
                    powc *= cu;
                }
                VarietyPoint p;
                p.coords.push_back(CoordValue::make_disc(center, r2.radius * dbound));
                p.coords.push_back(coord_of(r2));
                p.multiplicity = static_cast<unsigned>(r2.multiplicity);
                points.push_back(std::move(p));
            } else {
                throw std::runtime_error(
                    "variety enumeration failure: inexact eliminant root without shape position");
            }
        }
    } else {
        throw std::domain_error("variety_points: only n <= 2 supported");
    }

    // rigid multiplicities for exact points; candidates must close the books
    unsigned sum = 0;
    for (auto& p : points) {
        if (n <= 2 && p.all_exact()) {
            Ideal q = primary_component_at(I, p.to_point());
            p.multiplicity = q.codimension();
        }
        sum += p.multiplicity;
    }
    if (sum != total)
        throw std::runtime_error("variety enumeration failure: multiplicities do not sum to codimension");
    return points;
}

}  // namespace polydisc
