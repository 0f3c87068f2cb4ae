#pragma once

#include <optional>
#include <string>

#include "polydisc/disc.hpp"

namespace polydisc {

/// GCD of multivariate polynomials, computed through the principal
/// intersection (f) cap (g) = (lcm).  Result is monic under grevlex.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);
bool is_squarefree(const Polynomial& f);

enum class CurveTag { A, B, C, D, E, Undetermined };
std::string to_string(CurveTag t);

/// A closure operation met a factor whose class could not be decided.
struct UndeterminedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CurveClass {
    CurveTag tag = CurveTag::Undetermined;

    // A: a certified point of the curve inside the open bidisc
    std::optional<std::pair<CoordValue, CoordValue>> interior_point;
    // B / C: f = unit * (X_axis - boundary_value)
    int axis = -1;
    GaussianRational boundary_value;
    GaussianRational unit;
    // E: the finite support M((f)), all exact torus points
    std::vector<Point> support;

    std::string note;
};

/// Whether the coordinatewise Moebius image of the curve is, up to a complex
/// scalar, defined by a real-coefficient form.
bool mobius_realness_check(const Polynomial& f);

/// Classification of an irreducible plane curve relative to the bidisc.
/// Irreducibility is the caller's assertion; squarefreeness is enforced.
CurveClass classify_curve(const Polynomial& f, int samples = 24);

struct FactorInput {
    Polynomial poly;
    int multiplicity = 1;
    std::optional<CurveTag> hint;
};

/// Closure of the principal ideal (prod f_i^{k_i}): exponents are kept for
/// class A factors and collapse to 1 for classes B, C, D.  Class E and
/// Undetermined factors are errors here; they are handled by closure_plane.
Ideal closure_principal_power(const std::vector<FactorInput>& factors, int samples = 24);

struct PlaneFactorReport {
    Polynomial poly;
    int multiplicity = 1;
    CurveTag tag = CurveTag::Undetermined;
    int closure_exponent = -1;  // -1 for class E (the factor closes to a point set)
};

struct PlaneComponentReport {
    VarietyPoint point;
    std::vector<CirclePosition> position;
    std::string rule;
    unsigned radius = 0;
};

struct PlaneClosureResult {
    Ideal input;
    Ideal closure;
    std::vector<PlaneFactorReport> factors;
    std::vector<PlaneComponentReport> components;
};

/// Norm closure of an arbitrary ideal of C[X1,X2].  The principal part must
/// be supplied factored into pairwise non-associate irreducibles; the
/// cofactor ideal must be zero-dimensional (or trivial).
PlaneClosureResult closure_plane_report(const Ideal& I, const std::vector<FactorInput>& factors,
                                        int samples = 24);
Ideal closure_plane(const Ideal& I, const std::vector<FactorInput>& factors, int samples = 24);

}  // namespace polydisc
