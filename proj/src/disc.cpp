#include "polydisc/disc.hpp"

namespace polydisc {

Ideal maximal_ideal(const Point& z) {
    int n = z.dim();
    std::vector<Polynomial> gens;
    for (int j = 0; j < n; ++j)
        gens.push_back(Polynomial::variable(n, j) -
                       Polynomial::constant(n, z.coords[static_cast<size_t>(j)]));
    return Ideal(n, std::move(gens));
}

Ideal closed_maximal_power(const Point& z, unsigned r) {
    DiscPosition pos = classify_point(z);
    int n = z.dim();
    if (!pos.in_polydisc) return Ideal::unit(n);
    Ideal result = maximal_ideal_power(z, r);
    for (int j = 0; j < n; ++j) {
        if (pos.coordinate[static_cast<size_t>(j)] != CirclePosition::Boundary) continue;
        result = ideal_sum(result,
                           Ideal::principal(Polynomial::variable(n, j) -
                                            Polynomial::constant(n, z.coords[static_cast<size_t>(j)])));
    }
    return result;
}

Ideal closure_primary(const Ideal& I, const Point& z) {
    int n = I.nvars();
    if (z.dim() != n) throw std::invalid_argument("closure_primary: point arity mismatch");
    if (I.is_one() || I.is_zero())
        throw std::domain_error("closure_primary: input is not a proper primary ideal");
    if (!I.is_zero_dimensional())
        throw std::domain_error("closure_primary: input is not zero-dimensional");
    for (const auto& g : I.generators())
        if (!g.evaluate(z.coords).is_zero())
            throw std::domain_error("closure_primary: ideal not contained in m_z");
    for (int j = 0; j < n; ++j) {
        Polynomial lin = Polynomial::variable(n, j) -
                         Polynomial::constant(n, z.coords[static_cast<size_t>(j)]);
        if (!radical_contains(I, lin))
            throw std::domain_error("closure_primary: support is larger than {z}");
    }

    DiscPosition pos = classify_point(z);
    if (!pos.in_polydisc) return Ideal::unit(n);

    Ideal result = I;
    for (int j = 0; j < n; ++j) {
        if (pos.coordinate[static_cast<size_t>(j)] != CirclePosition::Boundary) continue;
        result = ideal_sum(result,
                           Ideal::principal(Polynomial::variable(n, j) -
                                            Polynomial::constant(n, z.coords[static_cast<size_t>(j)])));
    }
    return Ideal(n, result.groebner_basis());
}

Ideal stabilize_ideal_chain(const std::function<Ideal(unsigned)>& make, unsigned* radius_out) {
    constexpr unsigned kCap = 64;
    Ideal prev = make(1u);
    for (unsigned r = 1; r + 2 <= kCap; ++r) {
        Ideal next = make(r + 1);
        if (ideal_equal(prev, next) && ideal_equal(next, make(r + 2))) {
            if (radius_out) *radius_out = r;
            return prev;
        }
        prev = std::move(next);
    }
    throw std::runtime_error("closure chain stabilization cap (r = 64) exceeded");
}

FiniteSupportClosure i_tilde_finite_report(const Ideal& I) {
    if (!I.is_zero_dimensional())
        throw std::domain_error("i_tilde_finite: ideal is not zero-dimensional");
    int n = I.nvars();

    FiniteSupportClosure rep{I, Ideal::unit(n), {}};
    for (const auto& pt : variety_points(I)) {
        PointClosureStep step;
        step.point = pt;
        bool exterior = false;
        for (const auto& c : pt.coords) {
            CirclePosition pos = c.position_checked();
            step.position.push_back(pos);
            if (pos == CirclePosition::Exterior) exterior = true;
        }
        if (exterior) {
            step.dropped = true;
            rep.steps.push_back(std::move(step));
            continue;
        }
        if (!pt.all_exact())
            throw std::runtime_error(
                "variety enumeration failure: point inside the polydisc has no exact Gaussian "
                "rational representative");
        Point z = pt.to_point();
        Ideal contribution = stabilize_ideal_chain(
            [&](unsigned r) { return ideal_sum(I, closed_maximal_power(z, r)); }, &step.radius);
        rep.result = ideal_intersect(rep.result, contribution);
        rep.steps.push_back(std::move(step));
    }
    rep.result = Ideal(n, rep.result.groebner_basis());
    return rep;
}

Ideal i_tilde_finite(const Ideal& I) { return i_tilde_finite_report(I).result; }

}  // namespace polydisc
