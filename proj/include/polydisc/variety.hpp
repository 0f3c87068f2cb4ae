#pragma once

#include "polydisc/ideal.hpp"
#include "polydisc/point.hpp"
#include "polydisc/roots.hpp"

namespace polydisc {

/// One coordinate of a variety point: exact value or certified disc.
struct CoordValue {
    bool exact = false;
    GaussianRational value;  // value when exact, disc center otherwise
    Rational radius;         // 0 when exact

    static CoordValue make_exact(GaussianRational v) { return {true, std::move(v), Rational(0)}; }
    static CoordValue make_disc(GaussianRational c, Rational r) { return {false, std::move(c), std::move(r)}; }

    /// Certified circle position, throws on a straddling disc.
    CirclePosition position_checked() const;
    std::optional<CirclePosition> position() const;
};

struct VarietyPoint {
    std::vector<CoordValue> coords;
    unsigned multiplicity = 1;

    bool all_exact() const {
        for (const auto& c : coords)
            if (!c.exact) return false;
        return true;
    }
    Point to_point() const {
        if (!all_exact()) throw std::logic_error("inexact variety point");
        Point z;
        for (const auto& c : coords) z.coords.push_back(c.value);
        return z;
    }
};

/// All complex zeros of a zero-dimensional ideal (n <= 2), with
/// multiplicities summing to the codimension.  Throws std::domain_error on a
/// positive-dimensional input and std::runtime_error when enumeration cannot
/// be certified.
std::vector<VarietyPoint> variety_points(const Ideal& I, unsigned max_denominator = 10000);

/// Generators (X - z)^alpha, |alpha| = r, of the r-th power of the maximal
/// ideal at z.
Ideal maximal_ideal_power(const Point& z, unsigned r);

/// m_z-primary component of a zero-dimensional ideal, as the stabilized chain
/// I + m_z^r (agreement at r, r+1 and a confirming r+2; hard cap r <= 64).
Ideal primary_component_at(const Ideal& I, const Point& z, unsigned* radius_out = nullptr);

}  // namespace polydisc
