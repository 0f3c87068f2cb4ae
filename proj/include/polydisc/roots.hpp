#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "polydisc/norm.hpp"
#include "polydisc/polynomial.hpp"

namespace polydisc {

/// Dense univariate polynomial over the Gaussian rationals, coeffs[k] the
/// coefficient of X^k, no trailing zeros.
using UPoly = std::vector<GaussianRational>;

int upoly_degree(const UPoly& p);  // -1 for the zero polynomial
void upoly_trim(UPoly& p);
UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_scale(const UPoly& a, const GaussianRational& c);
UPoly upoly_derivative(const UPoly& p);
UPoly upoly_monic(const UPoly& p);
GaussianRational upoly_eval(const UPoly& p, const GaussianRational& z);
std::pair<UPoly, UPoly> upoly_divrem(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(UPoly a, UPoly b);  // monic

/// Extract the univariate view of a polynomial that involves only variable j.
UPoly extract_univariate(const Polynomial& p, int j);
Polynomial to_polynomial(int n, int j, const UPoly& p);

/// Yun decomposition: squarefree factors with multiplicities, product equals
/// the monic part of p.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

bool upoly_is_real(const UPoly& p);
/// Number of distinct real roots of a real-coefficient polynomial.
int sturm_real_root_count(const UPoly& p);

/// One root of a univariate polynomial: either an exact Gaussian rational or
/// a certified disc |z - center| <= radius containing exactly one root of the
/// corresponding squarefree factor.
struct UnivariateRoot {
    bool exact = false;
    GaussianRational value;   // root when exact, disc center otherwise
    Rational radius;          // 0 when exact
    int multiplicity = 1;
};

/// All complex roots with multiplicities.  Exact Gaussian rational roots are
/// detected by rounding numeric approximations to denominators bounded by
/// max_denominator and dividing out.  Throws std::runtime_error when numeric
/// certification fails.
std::vector<UnivariateRoot> isolate_roots(const UPoly& p, unsigned max_denominator = 10000);

enum class CirclePosition { Interior, Boundary, Exterior };

CirclePosition circle_position(const GaussianRational& z);
/// Certified position of every point of the disc |z - center| <= radius, or
/// nothing when the disc straddles the unit circle.
std::optional<CirclePosition> circle_position(const GaussianRational& center, const Rational& radius);
/// Position of a root; throws std::runtime_error on a straddling disc.
CirclePosition circle_position_checked(const UnivariateRoot& r);

/// Rational upper bound on |z| (exact when |z| is rational).
Rational abs_upper_bound(const GaussianRational& z, unsigned precision = 96);
Rational abs_lower_bound(const GaussianRational& z, unsigned precision = 96);

std::vector<std::complex<double>> durand_kerner(const std::vector<std::complex<double>>& monic_coeffs,
                                                int iterations = 400);

}  // namespace polydisc
