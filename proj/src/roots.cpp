#include "polydisc/roots.hpp"

#include <algorithm>
#include <cmath>

namespace polydisc {

int upoly_degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly upoly_add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    upoly_trim(r);
    return r;
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    upoly_trim(r);
    return r;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    upoly_trim(r);
    return r;
}

UPoly upoly_scale(const UPoly& a, const GaussianRational& c) {
    if (c.is_zero()) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

UPoly upoly_derivative(const UPoly& p) {
    if (p.size() <= 1) return {};
    UPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * GaussianRational(static_cast<long>(i));
    upoly_trim(r);
    return r;
}

UPoly upoly_monic(const UPoly& p) {
    if (p.empty()) return {};
    return upoly_scale(p, GaussianRational(1) / p.back());
}

GaussianRational upoly_eval(const UPoly& p, const GaussianRational& z) {
    GaussianRational acc;
    for (size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
}

std::pair<UPoly, UPoly> upoly_divrem(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw std::domain_error("univariate division by zero");
    UPoly rem = a, quot;
    int db = upoly_degree(b);
    if (upoly_degree(a) >= db) quot.assign(a.size() - b.size() + 1, GaussianRational());
    while (upoly_degree(rem) >= db) {
        int dr = upoly_degree(rem);
        GaussianRational c = rem.back() / b.back();
        quot[static_cast<size_t>(dr - db)] = c;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(dr - db + i)] -= c * b[static_cast<size_t>(i)];
        upoly_trim(rem);
    }
    upoly_trim(quot);
    return {quot, rem};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        UPoly r = upoly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return upoly_monic(a);
}

UPoly extract_univariate(const Polynomial& p, int j) {
    UPoly r;
    for (const auto& [m, c] : p.terms()) {
        for (size_t k = 0; k < m.size(); ++k)
            if (static_cast<int>(k) != j && m[k] > 0)
                throw std::invalid_argument("extract_univariate: other variables present");
        size_t e = m[static_cast<size_t>(j)];
        if (r.size() <= e) r.resize(e + 1);
        r[e] = c;
    }
    upoly_trim(r);
    return r;
}

Polynomial to_polynomial(int n, int j, const UPoly& p) {
    Polynomial f(n);
    for (size_t e = 0; e < p.size(); ++e) {
        if (p[e].is_zero()) continue;
        Monomial m = mono_one(n);
        m[static_cast<size_t>(j)] = static_cast<std::uint32_t>(e);
        f.add_term(m, p[e]);
    }
    return f;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p_in) {
    UPoly p = upoly_monic(p_in);
    std::vector<std::pair<UPoly, int>> out;
    if (upoly_degree(p) < 1) return out;

    UPoly dp = upoly_derivative(p);
    UPoly g = upoly_gcd(p, dp);
    UPoly c = upoly_divrem(p, g).first;
    UPoly d = upoly_sub(upoly_divrem(dp, g).first, upoly_derivative(c));
    int mult = 1;
    while (upoly_degree(c) >= 1) {
        UPoly s = upoly_gcd(c, d);
        if (upoly_degree(s) >= 1) out.emplace_back(upoly_monic(s), mult);
        c = upoly_divrem(c, s).first;
        d = upoly_sub(upoly_divrem(d, s).first, upoly_derivative(c));
        ++mult;
    }
    return out;
}

bool upoly_is_real(const UPoly& p) {
    for (const auto& c : p)
        if (!c.is_real()) return false;
    return true;
}

namespace {

int sign_at_infinity(const UPoly& p, int dir) {
    // dir = +1 for +inf, -1 for -inf
    if (p.empty()) return 0;
    int d = upoly_degree(p);
    int s = sgn(p.back().re);
    if (dir < 0 && d % 2 == 1) s = -s;
    return s;
}

}  // namespace

int sturm_real_root_count(const UPoly& p_in) {
    if (!upoly_is_real(p_in)) throw std::invalid_argument("sturm: complex coefficients");
    UPoly p = upoly_monic(p_in);
    if (upoly_degree(p) < 1) return 0;
    // squarefree part, so the count is of distinct roots
    UPoly sf = upoly_divrem(p, upoly_gcd(p, upoly_derivative(p))).first;

    std::vector<UPoly> chain{sf, upoly_derivative(sf)};
    while (upoly_degree(chain.back()) >= 1) {
        UPoly r = upoly_divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    auto variations = [&](int dir) {
        int v = 0, prev = 0;
        for (const auto& q : chain) {
            int s = sign_at_infinity(q, dir);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    return variations(-1) - variations(+1);
}

std::vector<std::complex<double>> durand_kerner(const std::vector<std::complex<double>>& coeffs,
                                                int iterations) {
    int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 1) return {};
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
        return acc;
    };
    // Cauchy bound for the root radius
    double radius = 0;
    for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(coeffs[static_cast<size_t>(i)]));
    radius = 1.0 + radius / std::abs(coeffs.back());

    std::vector<std::complex<double>> z(static_cast<size_t>(d));
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (int i = 0; i < d; ++i) {
        acc *= seed;
        z[static_cast<size_t>(i)] = acc * (0.5 * radius);
    }
    for (int it = 0; it < iterations; ++it) {
        double worst = 0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> den = coeffs.back();
            for (int j = 0; j < d; ++j)
                if (j != i) den *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            if (den == 0.0) {
                z[static_cast<size_t>(i)] += std::complex<double>(1e-8, 2e-8) * (double)(i + 1);
                worst = 1;
                continue;
            }
            std::complex<double> delta = eval(z[static_cast<size_t>(i)]) / den;
            z[static_cast<size_t>(i)] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-15 * radius) break;
    }
    return z;
}

namespace {

GaussianRational from_doubles(double re, double im) {
    return {Rational(re), Rational(im)};  // exact binary-to-rational
}

// best rational approximation with denominator <= bound (continued fractions)
Rational round_to_denominator(double x, unsigned long bound) {
    if (!std::isfinite(x) || std::fabs(x) > 1e12) return Rational(0);
    bool neg = x < 0;
    double frac = std::fabs(x);
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        Integer a(fl);
        if (q1 != 0 && q0 + a * q1 > static_cast<long>(bound)) break;
        Integer p2 = p0 + a * p1, q2 = q0 + a * q1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

std::vector<std::complex<double>> to_double_coeffs(const UPoly& p) {
    std::vector<std::complex<double>> c;
    c.reserve(p.size());
    for (const auto& g : p) c.emplace_back(g.re.get_d(), g.im.get_d());
    return c;
}

// exact Newton step with dyadic rounding to keep sizes small
GaussianRational newton_polish(const UPoly& p, const UPoly& dp, GaussianRational z, int steps) {
    const Integer scale = Integer(1) << 96;
    for (int s = 0; s < steps; ++s) {
        GaussianRational d = upoly_eval(dp, z);
        if (d.is_zero()) return z;
        z -= upoly_eval(p, z) / d;
        auto shrink = [&](Rational& q) {
            Integer num = q.get_num() * scale / q.get_den();
            q = Rational(num, scale);
            q.canonicalize();
        };
        shrink(z.re);
        shrink(z.im);
    }
    return z;
}

}  // namespace

Rational abs_upper_bound(const GaussianRational& z, unsigned precision) {
    return sqrt_enclosure(z.abs_squared(), precision).hi;
}

Rational abs_lower_bound(const GaussianRational& z, unsigned precision) {
    return sqrt_enclosure(z.abs_squared(), precision).lo;
}

std::vector<UnivariateRoot> isolate_roots(const UPoly& p_in, unsigned max_denominator) {
    UPoly p = p_in;
    upoly_trim(p);
    if (p.empty()) throw std::domain_error("isolate_roots: zero polynomial");

    std::vector<UnivariateRoot> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        UPoly q = factor;

        // exact Gaussian rational roots at bounded denominator
        bool found = true;
        while (found && upoly_degree(q) >= 1) {
            found = false;
            for (const auto& zd : durand_kerner(to_double_coeffs(upoly_monic(q)))) {
                GaussianRational cand(round_to_denominator(zd.real(), max_denominator),
                                      round_to_denominator(zd.imag(), max_denominator));
                if (!upoly_eval(q, cand).is_zero()) continue;
                UnivariateRoot r;
                r.exact = true;
                r.value = cand;
                r.multiplicity = mult;
                out.push_back(r);
                UPoly lin{-cand, GaussianRational(1)};
                auto [quot, rem] = upoly_divrem(q, lin);
                if (!rem.empty()) throw std::logic_error("exact deflation left a remainder");
                q = std::move(quot);
                found = true;
                break;
            }
        }

        int d = upoly_degree(q);
        if (d < 1) continue;

        // numeric roots of the remaining squarefree factor, certified by the
        // d*|q/q'| inclusion bound and pairwise disjointness
        UPoly dq = upoly_derivative(q);
        for (int attempt = 0;; ++attempt) {
            if (attempt > 3)
                throw std::runtime_error("root certification failed (clustered roots?)");
            auto approx = durand_kerner(to_double_coeffs(upoly_monic(q)), 400 << attempt);
            std::vector<UnivariateRoot> roots;
            bool ok = true;
            for (const auto& zd : approx) {
                GaussianRational c = from_doubles(zd.real(), zd.imag());
                if (attempt > 0) c = newton_polish(q, dq, c, attempt);
                GaussianRational der = upoly_eval(dq, c);
                if (der.is_zero()) {
                    ok = false;
                    break;
                }
                Rational ratio2 = upoly_eval(q, c).abs_squared() / der.abs_squared();
                Rational radius = Rational(d) * sqrt_enclosure(ratio2, 96).hi;
                UnivariateRoot r;
                r.exact = false;
                r.value = c;
                r.radius = radius;
                r.multiplicity = mult;
                roots.push_back(std::move(r));
            }
            if (ok) {
                for (size_t i = 0; i + 1 < roots.size() && ok; ++i)
                    for (size_t j = i + 1; j < roots.size() && ok; ++j) {
                        Rational dist2 = (roots[i].value - roots[j].value).abs_squared();
                        Rational rr = roots[i].radius + roots[j].radius;
                        if (!(dist2 > rr * rr)) ok = false;
                    }
            }
            if (ok) {
                out.insert(out.end(), roots.begin(), roots.end());
                break;
            }
        }
    }
    return out;
}

CirclePosition circle_position(const GaussianRational& z) {
    Rational a2 = z.abs_squared();
    if (a2 < 1) return CirclePosition::Interior;
    if (a2 == 1) return CirclePosition::Boundary;
    return CirclePosition::Exterior;
}

std::optional<CirclePosition> circle_position(const GaussianRational& center, const Rational& radius) {
    if (radius == 0) return circle_position(center);
    Rational cu = abs_upper_bound(center);
    Rational cl = abs_lower_bound(center);
    Rational up = cu + radius;
    if (up * up < 1) return CirclePosition::Interior;
    if (cl > radius) {
        Rational low = cl - radius;
        if (low * low > 1) return CirclePosition::Exterior;
    }
    return std::nullopt;
}

CirclePosition circle_position_checked(const UnivariateRoot& r) {
    if (r.exact) return circle_position(r.value);
    auto pos = circle_position(r.value, r.radius);
    if (!pos)
        throw std::runtime_error(
            "boundary-ambiguous root: certified interval straddles the unit circle and no exact "
            "representative was found");
    return *pos;
}

}  // namespace polydisc
