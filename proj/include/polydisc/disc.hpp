#pragma once

#include <functional>
#include <string>

#include "polydisc/variety.hpp"

namespace polydisc {

/// Stabilized value of a decreasing ideal chain: equal reduced bases at r and
/// r+1 with a confirming check at r+2; hard cap r <= 64.
Ideal stabilize_ideal_chain(const std::function<Ideal(unsigned)>& make, unsigned* radius_out = nullptr);

/// The maximal ideal (X1 - z1, ..., Xn - zn).
Ideal maximal_ideal(const Point& z);

/// Closure of m_z^r: the ideal itself with X_j - z_j adjoined for every
/// boundary coordinate, and (1) when z lies outside the closed polydisc.
Ideal closed_maximal_power(const Point& z, unsigned r);

/// Closure of an m_z-primary ideal: (1) outside the polydisc, otherwise I
/// with the boundary-coordinate linear forms adjoined.  The primariness of I
/// at z is checked, not trusted.
Ideal closure_primary(const Ideal& I, const Point& z);

struct PointClosureStep {
    VarietyPoint point;
    std::vector<CirclePosition> position;
    bool dropped = false;       // outside the polydisc, contributes (1)
    unsigned radius = 0;        // stabilization radius of I + closure(m_z^r)
};

struct FiniteSupportClosure {
    Ideal input;
    Ideal result;
    std::vector<PointClosureStep> steps;
};

/// Closure of a zero-dimensional ideal as the finite intersection over its
/// polydisc support of the stabilized chains I + closure(m_z^r).  Points of
/// the variety outside the polydisc are dropped; an empty support yields (1).
FiniteSupportClosure i_tilde_finite_report(const Ideal& I);
Ideal i_tilde_finite(const Ideal& I);

}  // namespace polydisc
