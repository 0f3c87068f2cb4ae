#include "polydisc/curves.hpp"

#include <algorithm>

namespace polydisc {

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    MonomialOrder order = MonomialOrder::grevlex(f.nvars());
    auto monic = [&](const Polynomial& p) {
        return p.scaled(GaussianRational(1) / p.leading_term(order).second);
    };
    if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.nvars(), GaussianRational(1));

    Ideal inter = ideal_intersect(Ideal::principal(f), Ideal::principal(g));
    const auto& basis = inter.groebner_basis();
    if (basis.size() != 1) throw std::logic_error("intersection of principal ideals not principal");
    const Polynomial& lcm = basis[0];
    auto q = divide_exact(f * g, lcm);
    if (!q) throw std::logic_error("lcm does not divide the product");
    return monic(*q);
}

bool is_squarefree(const Polynomial& f) {
    if (f.is_zero()) return false;
    Polynomial d = f;
    for (int j = 0; j < f.nvars(); ++j) {
        Polynomial pj = f.partial_derivative(j);
        if (!pj.is_zero()) d = poly_gcd(d, pj);
    }
    return d.is_constant();
}

std::string to_string(CurveTag t) {
    switch (t) {
        case CurveTag::A: return "A";
        case CurveTag::B: return "B";
        case CurveTag::C: return "C";
        case CurveTag::D: return "D";
        case CurveTag::E: return "E";
        default: return "Undetermined";
    }
}

namespace {

// f reflected through the torus: X1^d1 X2^d2 conj(f)(1/X1, 1/X2).  A curve
// whose restricted zero set sits inside the torus satisfies f | f*.
Polynomial torus_reflection(const Polynomial& f) {
    unsigned d1 = f.degree_in(0), d2 = f.degree_in(1);
    Polynomial r(2);
    for (const auto& [m, c] : f.terms()) {
        Monomial mm{d1 - m[0], d2 - m[1]};
        r.add_term(mm, c.conj());
    }
    return r;
}

bool is_scalar_multiple(const Polynomial& f, const Polynomial& g) {
    // g == c f for some nonzero constant c
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.term_count() != g.term_count()) return false;
    const auto& [m0, c0] = *f.terms().begin();
    GaussianRational c = g.coeff(m0);
    if (c.is_zero()) return false;
    return g == f.scaled(c / c0);
}

// deterministic interior abscissas; all |x|^2 < 1 exactly
std::vector<GaussianRational> interior_samples(int count) {
    std::vector<GaussianRational> xs = {
        GaussianRational(0),
        GaussianRational(make_rational(1, 2)),
        GaussianRational(make_rational(-1, 2)),
        {Rational(0), make_rational(1, 2)},
        {Rational(0), make_rational(-1, 2)},
        GaussianRational(make_rational(1, 3)),
        GaussianRational(make_rational(-1, 3)),
        GaussianRational(make_rational(3, 4)),
        GaussianRational(make_rational(-3, 4)),
        {make_rational(1, 2), make_rational(1, 2)},
        {make_rational(-1, 2), make_rational(1, 2)},
        {make_rational(1, 2), make_rational(-1, 2)},
        {make_rational(3, 10), make_rational(2, 5)},
        {make_rational(-3, 10), make_rational(-2, 5)},
        GaussianRational(make_rational(9, 10)),
        GaussianRational(make_rational(-9, 10)),
        {Rational(0), make_rational(9, 10)},
        {make_rational(1, 5), make_rational(-3, 5)},
    };
    // extend deterministically with small-denominator points in the open disc
    long k = 1;
    while (static_cast<int>(xs.size()) < count) {
        Rational re = make_rational((k * 5) % 13 - 6, 8);
        Rational im = make_rational((k * 7) % 11 - 5, 8);
        GaussianRational z(re, im);
        if (z.abs_squared() < 1 &&
            std::find(xs.begin(), xs.end(), z) == xs.end())
            xs.push_back(z);
        ++k;
    }
    xs.resize(static_cast<size_t>(count));
    return xs;
}

std::vector<Rational> real_samples(int count) {
    std::vector<Rational> us = {Rational(0),          make_rational(1, 2),  make_rational(-1, 2),
                                Rational(1),          Rational(-1),         Rational(2),
                                Rational(-2),         make_rational(1, 3),  make_rational(-1, 3),
                                Rational(3),          Rational(-3),         make_rational(3, 2),
                                make_rational(-3, 2), make_rational(2, 3),  make_rational(-2, 3),
                                Rational(5),          Rational(-5),         make_rational(1, 4)};
    long k = 1;
    while (static_cast<int>(us.size()) < count) {
        Rational u = make_rational(2 * k + 1, (k % 3) + 2);
        if (std::find(us.begin(), us.end(), u) == us.end()) us.push_back(u);
        ++k;
    }
    us.resize(static_cast<size_t>(count));
    return us;
}

struct FiberScan {
    bool has_certified_interior = false;
    std::pair<GaussianRational, Rational> interior_disc;  // center, radius
    bool all_exterior = true;
    bool ambiguous = false;
};

FiberScan scan_fiber(const UPoly& fiber) {
    FiberScan s;
    if (upoly_degree(fiber) < 1) return s;
    std::vector<UnivariateRoot> roots;
    try {
        roots = isolate_roots(fiber);
    } catch (const std::runtime_error&) {
        s.ambiguous = true;
        s.all_exterior = false;
        return s;
    }
    for (const auto& r : roots) {
        auto pos = r.exact ? std::optional<CirclePosition>(circle_position(r.value))
                           : circle_position(r.value, r.radius);
        if (!pos) {
            s.ambiguous = true;
            s.all_exterior = false;
            continue;
        }
        if (*pos == CirclePosition::Interior) {
            s.has_certified_interior = true;
            s.all_exterior = false;
            s.interior_disc = {r.value, r.radius};
        } else if (*pos == CirclePosition::Boundary) {
            s.all_exterior = false;
        }
    }
    return s;
}

CurveClass classify_line(const Polynomial& f, int var) {
    // f = a X_var + b
    GaussianRational a, b;
    for (const auto& [m, c] : f.terms()) {
        if (total_degree(m) == 0)
            b = c;
        else
            a = c;
    }
    GaussianRational z = -b / a;
    CurveClass out;
    switch (circle_position(z)) {
        case CirclePosition::Boundary:
            out.tag = var == 0 ? CurveTag::B : CurveTag::C;
            out.axis = var;
            out.boundary_value = z;
            out.unit = a;
            break;
        case CirclePosition::Interior: {
            out.tag = CurveTag::A;
            CoordValue zc = CoordValue::make_exact(z);
            CoordValue oc = CoordValue::make_exact(GaussianRational(0));
            out.interior_point = var == 0 ? std::make_pair(zc, oc) : std::make_pair(oc, zc);
            out.note = "axis line through the open bidisc";
            break;
        }
        case CirclePosition::Exterior:
            out.tag = CurveTag::E;
            out.note = "axis line outside the polydisc; empty support";
            break;
    }
    return out;
}

}  // namespace

Polynomial mobius_polynomial_form(const Polynomial& f) {
    // (1+U)^d1 (1+V)^d2 f(i(1-U)/(1+U), i(1-V)/(1+V))
    unsigned d1 = f.degree_in(0), d2 = f.degree_in(1);
    Polynomial u = Polynomial::variable(2, 0), v = Polynomial::variable(2, 1);
    Polynomial one = Polynomial::constant(2, GaussianRational(1));
    Polynomial au = (one - u).scaled(gr_i());
    Polynomial av = (one - v).scaled(gr_i());
    Polynomial bu = one + u, bv = one + v;

    std::vector<Polynomial> aup(d1 + 1, one), bup(d1 + 1, one), avp(d2 + 1, one), bvp(d2 + 1, one);
    for (unsigned e = 1; e <= d1; ++e) aup[e] = aup[e - 1] * au, bup[e] = bup[e - 1] * bu;
    for (unsigned e = 1; e <= d2; ++e) avp[e] = avp[e - 1] * av, bvp[e] = bvp[e - 1] * bv;

    Polynomial F(2);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(2, c);
        t *= aup[m[0]] * bup[d1 - m[0]];
        t *= avp[m[1]] * bvp[d2 - m[1]];
        F += t;
    }
    return F;
}

bool mobius_realness_check(const Polynomial& f) {
    if (f.nvars() != 2 || f.is_zero()) throw std::invalid_argument("mobius_realness_check: need a nonzero bivariate polynomial");
    Polynomial F = mobius_polynomial_form(f);
    const GaussianRational c0 = F.terms().begin()->second;
    for (const auto& [m, c] : F.terms())
        if (!(c / c0).is_real()) return false;
    return true;
}

CurveClass classify_curve(const Polynomial& f, int samples) {
    if (f.nvars() != 2) throw std::invalid_argument("classify_curve: need a bivariate polynomial");
    if (f.is_zero() || f.is_constant()) throw std::invalid_argument("classify_curve: constant input");
    if (!is_squarefree(f)) throw std::domain_error("classify_curve: input is not squarefree");
    samples = std::max(samples, 8);

    unsigned d1 = f.degree_in(0), d2 = f.degree_in(1);
    if (d2 == 0 && d1 == 1) return classify_line(f, 0);
    if (d1 == 0 && d2 == 1) return classify_line(f, 1);
    if (d1 == 0 || d2 == 0)
        throw std::domain_error("classify_curve: univariate of degree > 1 is reducible over C");

    // certified point of the curve inside the open bidisc => case A
    auto xs = interior_samples(samples);
    for (int axis = 0; axis < 2; ++axis) {
        int other = 1 - axis;
        for (const auto& x : xs) {
            Polynomial sub = f.substitute_value(axis, x);
            if (sub.is_zero() || sub.is_constant()) continue;
            FiberScan s = scan_fiber(extract_univariate(sub, other));
            if (s.has_certified_interior) {
                CurveClass out;
                out.tag = CurveTag::A;
                CoordValue xc = CoordValue::make_exact(x);
                CoordValue yc = CoordValue::make_disc(s.interior_disc.first, s.interior_disc.second);
                out.interior_point = axis == 0 ? std::make_pair(xc, yc) : std::make_pair(yc, xc);
                return out;
            }
        }
    }

    if (is_scalar_multiple(f, torus_reflection(f))) {
        // candidate for infinite contact inside the torus
        CurveClass out;
        if (!mobius_realness_check(f)) {
            out.tag = CurveTag::Undetermined;
            out.note = "torus-symmetric but the Moebius image is not defined over R";
            return out;
        }
        Polynomial F = mobius_polynomial_form(f);
        Polynomial G = F.scaled(GaussianRational(1) / F.terms().begin()->second);
        unsigned degV = G.degree_in(1);
        if (degV == 0) {
            out.tag = CurveTag::Undetermined;
            out.note = "Moebius image degenerate in the second variable";
            return out;
        }
        int all_real_fibers = 0;
        for (const auto& u : real_samples(samples)) {
            Polynomial su = G.substitute_value(0, GaussianRational(u));
            if (su.is_zero()) continue;
            UPoly gu = extract_univariate(su, 1);
            if (upoly_degree(gu) != static_cast<int>(degV)) continue;  // fiber degenerates to infinity
            if (upoly_degree(upoly_gcd(gu, upoly_derivative(gu))) > 0) {
                out.tag = CurveTag::Undetermined;
                out.note = "sampled real fiber is ramified";
                return out;
            }
            if (sturm_real_root_count(gu) != static_cast<int>(degV)) {
                out.tag = CurveTag::Undetermined;
                out.note = "sampled real fiber has non-real points";
                return out;
            }
            ++all_real_fibers;
        }
        if (all_real_fibers < 4) {
            out.tag = CurveTag::Undetermined;
            out.note = "not enough usable real fibers";
            return out;
        }
        // every sampled fiber over the open disc must stay outside the closed disc
        for (int axis = 0; axis < 2; ++axis) {
            int other = 1 - axis;
            for (const auto& x : xs) {
                Polynomial sub = f.substitute_value(axis, x);
                if (sub.is_zero() || sub.is_constant()) continue;
                FiberScan s = scan_fiber(extract_univariate(sub, other));
                if (!s.all_exterior) {
                    out.tag = CurveTag::Undetermined;
                    out.note = "fiber root over an interior sample not certified exterior";
                    return out;
                }
            }
        }
        out.tag = CurveTag::D;
        out.note = "torus-symmetric real model; " + std::to_string(all_real_fibers) +
                   " all-real sampled fibers";
        return out;
    }

    // finite-contact enumeration through the torus reflection
    CurveClass out;
    Ideal cand(2, {f, torus_reflection(f)});
    if (cand.is_one()) {
        out.tag = CurveTag::E;
        out.note = "no torus contact; empty support";
        return out;
    }
    if (!cand.is_zero_dimensional()) {
        out.tag = CurveTag::Undetermined;
        out.note = "torus contact system is not zero-dimensional";
        return out;
    }
    std::vector<VarietyPoint> pts;
    try {
        pts = variety_points(cand);
    } catch (const std::runtime_error& e) {
        out.tag = CurveTag::Undetermined;
        out.note = std::string("contact enumeration failed: ") + e.what();
        return out;
    }
    for (const auto& pt : pts) {
        std::vector<CirclePosition> pos;
        for (const auto& c : pt.coords) {
            auto p = c.position();
            if (!p) {
                out.tag = CurveTag::Undetermined;
                out.note = "contact candidate with boundary-ambiguous coordinate";
                return out;
            }
            pos.push_back(*p);
        }
        bool exterior = std::any_of(pos.begin(), pos.end(),
                                    [](CirclePosition p) { return p == CirclePosition::Exterior; });
        if (exterior) continue;
        bool interior = std::all_of(pos.begin(), pos.end(),
                                    [](CirclePosition p) { return p == CirclePosition::Interior; });
        if (interior) {
            // the candidate lies on V(f) inside the open bidisc
            out.tag = CurveTag::A;
            out.interior_point = std::make_pair(pt.coords[0], pt.coords[1]);
            out.note = "interior point found among torus-contact candidates";
            return out;
        }
        bool torus = std::all_of(pos.begin(), pos.end(),
                                 [](CirclePosition p) { return p == CirclePosition::Boundary; });
        if (!torus) {
            out.tag = CurveTag::Undetermined;
            out.note = "contact candidate with mixed boundary/interior position";
            return out;
        }
        if (!pt.all_exact()) {
            out.tag = CurveTag::Undetermined;
            out.note = "torus contact point without exact coordinates";
            return out;
        }
        out.support.push_back(pt.to_point());
    }
    out.tag = CurveTag::E;
    return out;
}

namespace {

CurveTag resolve_class(const FactorInput& factor, int samples, std::string* note) {
    CurveClass cls = classify_curve(factor.poly, samples);
    if (cls.tag == CurveTag::Undetermined && factor.hint) {
        if (note) *note = "classifier undetermined; caller hint applied";
        return *factor.hint;
    }
    if (factor.hint && *factor.hint != cls.tag)
        throw std::invalid_argument("curve class hint contradicts the classifier");
    return cls.tag;
}

Ideal factor_closure(const FactorInput& factor, CurveTag tag, const CurveClass& cls,
                     int* closure_exponent) {
    switch (tag) {
        case CurveTag::A:
            *closure_exponent = factor.multiplicity;
            return Ideal::principal(factor.poly.pow(static_cast<unsigned>(factor.multiplicity)));
        case CurveTag::B:
        case CurveTag::C:
        case CurveTag::D:
            *closure_exponent = 1;
            return Ideal::principal(factor.poly);
        case CurveTag::E: {
            *closure_exponent = -1;
            Ideal acc = Ideal::unit(2);
            for (const auto& z : cls.support) acc = ideal_intersect(acc, maximal_ideal(z));
            return acc;
        }
        default:
            throw UndeterminedError("curve class undetermined for factor");
    }
}

}  // namespace

Ideal closure_principal_power(const std::vector<FactorInput>& factors, int samples) {
    Polynomial prod = Polynomial::constant(2, GaussianRational(1));
    for (const auto& factor : factors) {
        if (factor.poly.nvars() != 2 || factor.poly.is_constant())
            throw std::invalid_argument("closure_principal_power: bad factor");
        if (factor.multiplicity < 1) throw std::invalid_argument("closure_principal_power: bad exponent");
        std::string note;
        CurveTag tag = resolve_class(factor, samples, &note);
        int kprime = 0;
        switch (tag) {
            case CurveTag::A: kprime = factor.multiplicity; break;
            case CurveTag::B:
            case CurveTag::C:
            case CurveTag::D: kprime = 1; break;
            case CurveTag::E:
                throw std::domain_error(
                    "closure_principal_power: class E factor; use the full plane closure");
            default:
                throw UndeterminedError("closure_principal_power: undetermined factor class");
        }
        prod *= factor.poly.pow(static_cast<unsigned>(kprime));
    }
    MonomialOrder order = MonomialOrder::grevlex(2);
    prod = prod.scaled(GaussianRational(1) / prod.leading_term(order).second);
    return Ideal::principal(prod);
}

PlaneClosureResult closure_plane_report(const Ideal& I, const std::vector<FactorInput>& factors,
                                        int samples) {
    if (I.nvars() != 2) throw std::invalid_argument("closure_plane: two variables required");
    PlaneClosureResult rep{I, Ideal(2), {}, {}};
    if (I.is_zero()) {
        rep.closure = Ideal(2);
        return rep;
    }

    Polynomial f = Polynomial::constant(2, GaussianRational(1));
    for (const auto& factor : factors) {
        if (factor.poly.nvars() != 2 || factor.poly.is_constant() || factor.multiplicity < 1)
            throw std::invalid_argument("closure_plane: bad principal factor");
        f *= factor.poly.pow(static_cast<unsigned>(factor.multiplicity));
    }

    // cofactor ideal J with I = f J; requires f to divide every generator
    std::vector<Polynomial> hs;
    for (const auto& g : I.generators()) {
        auto h = divide_exact(g, f);
        if (!h) throw std::invalid_argument("closure_plane: principal part does not divide a generator");
        hs.push_back(std::move(*h));
    }
    Polynomial rest(2);
    for (const auto& h : hs) rest = poly_gcd(rest, h);
    if (!rest.is_constant())
        throw std::invalid_argument("closure_plane: factored principal part is incomplete");
    Ideal J(2, hs);
    if (!J.is_one() && !J.is_zero_dimensional())
        throw std::domain_error("closure_plane: cofactor ideal is not zero-dimensional");

    // closure of the principal part, factor by factor
    Ideal result = Ideal::unit(2);
    for (const auto& factor : factors) {
        CurveClass cls = classify_curve(factor.poly, samples);
        CurveTag tag = cls.tag;
        if (tag == CurveTag::Undetermined && factor.hint) tag = *factor.hint;
        if (factor.hint && cls.tag != CurveTag::Undetermined && *factor.hint != cls.tag)
            throw std::invalid_argument("closure_plane: class hint contradicts the classifier");
        if (tag == CurveTag::E && cls.tag == CurveTag::Undetermined)
            throw UndeterminedError("closure_plane: class E hint needs a computed support");
        PlaneFactorReport fr;
        fr.poly = factor.poly;
        fr.multiplicity = factor.multiplicity;
        fr.tag = tag;
        Ideal c = factor_closure(factor, tag, cls, &fr.closure_exponent);
        result = ideal_intersect(result, c);
        rep.factors.push_back(std::move(fr));
    }

    if (!J.is_one()) {
        for (const auto& pt : variety_points(J)) {
            PlaneComponentReport cr;
            cr.point = pt;
            bool exterior = false;
            for (const auto& c : pt.coords) {
                CirclePosition pos = c.position_checked();
                cr.position.push_back(pos);
                if (pos == CirclePosition::Exterior) exterior = true;
            }
            if (exterior) {
                cr.rule = "outside the polydisc: dropped";
                rep.components.push_back(std::move(cr));
                continue;
            }
            if (!pt.all_exact())
                throw std::runtime_error(
                    "closure_plane: component point inside the polydisc has no exact representative");
            Point z = pt.to_point();
            DiscPosition pos = classify_point(z);
            Ideal Jnu = primary_component_at(J, z);

            if (pos.all_interior()) {
                Polynomial s = Polynomial::constant(2, GaussianRational(1));
                for (const auto& factor : factors)
                    if (factor.poly.evaluate(z.coords).is_zero())
                        s *= factor.poly.pow(static_cast<unsigned>(factor.multiplicity));
                Ideal contrib = s.is_constant() ? Jnu : ideal_product(Ideal::principal(s), Jnu);
                cr.rule = s.is_constant() ? "interior point: primary component kept"
                                          : "interior point on the curve: local principal part kept";
                result = ideal_intersect(result, contrib);
            } else if (pos.all_boundary()) {
                if (f.evaluate(z.coords).is_zero()) {
                    cr.rule = "torus point on the curve: absorbed by the principal closure";
                } else {
                    cr.rule = "torus point off the curve: contributes the maximal ideal";
                    result = ideal_intersect(result, maximal_ideal(z));
                }
            } else {
                int b = pos.coordinate[0] == CirclePosition::Boundary ? 0 : 1;
                if (f.substitute_value(b, z.coords[static_cast<size_t>(b)]).is_zero()) {
                    cr.rule = "boundary line inside the principal part: absorbed";
                } else {
                    Ideal fJnu = ideal_product(Ideal::principal(f), Jnu);
                    Ideal contrib = stabilize_ideal_chain(
                        [&](unsigned r) { return ideal_sum(fJnu, closed_maximal_power(z, r)); },
                        &cr.radius);
                    cr.rule = "mixed boundary point: stabilized chain";
                    result = ideal_intersect(result, contrib);
                }
            }
            rep.components.push_back(std::move(cr));
        }
    }

    rep.closure = Ideal(2, result.groebner_basis());
    return rep;
}

Ideal closure_plane(const Ideal& I, const std::vector<FactorInput>& factors, int samples) {
    return closure_plane_report(I, factors, samples).closure;
}

}  // namespace polydisc
