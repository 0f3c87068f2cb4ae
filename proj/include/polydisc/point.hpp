#pragma once

#include <vector>

#include "polydisc/rational.hpp"
#include "polydisc/roots.hpp"

namespace polydisc {

/// Point of C^n with exact Gaussian rational coordinates.
struct Point {
    std::vector<GaussianRational> coords;

    Point() = default;
    explicit Point(std::vector<GaussianRational> c) : coords(std::move(c)) {}
    Point(GaussianRational a, GaussianRational b) : coords{std::move(a), std::move(b)} {}

    int dim() const { return static_cast<int>(coords.size()); }

    friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
};

/// Exact per-coordinate position relative to the closed unit disc, plus the
/// aggregate polydisc verdict.
struct DiscPosition {
    std::vector<CirclePosition> coordinate;
    bool in_polydisc = true;

    bool all_interior() const {
        for (auto c : coordinate)
            if (c != CirclePosition::Interior) return false;
        return true;
    }
    bool all_boundary() const {
        for (auto c : coordinate)
            if (c != CirclePosition::Boundary) return false;
        return true;
    }
};

inline DiscPosition classify_point(const Point& z) {
    DiscPosition pos;
    for (const auto& c : z.coords) {
        pos.coordinate.push_back(circle_position(c));
        if (pos.coordinate.back() == CirclePosition::Exterior) pos.in_polydisc = false;
    }
    return pos;
}

}  // namespace polydisc
