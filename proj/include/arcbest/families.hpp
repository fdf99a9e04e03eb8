#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arcbest/geometry.hpp"
#include "arcbest/poly.hpp"

namespace arcbest {

// One-parameter interpolant family of degree n with smoothness order n - 2:
// parabolic G0, cubic G1, quartic G2, quintic G3.
struct FamilyId {
  int degree = 2;
};

FamilyId make_family(int degree);  // throws DomainError unless degree in {2..5}

// Even quadratic q(t) = alpha * t^2 + beta, the non-trivial factor of the
// simplified radial error psi(t, d) = (t^2 - 1)^(n-1) * q(t).
struct QuadraticQ {
  double alpha = 0.0;
  double beta = 0.0;
  double eval(double t) const { return alpha * t * t + beta; }
};

// Admissible parameter interval I_n together with the auxiliary constants
// that define it. For n = 2, 3 the interval is unbounded above and i_hi
// holds the finite search cap used by the solvers.
struct FamilyIntervals {
  double i_lo = 0.0;
  double i_hi = 0.0;
  bool i_hi_unbounded = false;
  std::vector<std::pair<std::string, double>> constants;

  double constant(const std::string& name) const;  // throws IndexError
};

// Control points of the degree-n interpolant for parameter d. The upper half
// is mirrored from the lower half so b_j == reflect_x(b_{n-j}) holds exactly.
BezierCurve2 control_points(FamilyId family, const ArcSpec& arc, double d);

QuadraticQ q_coeffs(FamilyId family, const ArcSpec& arc, double d);

// alpha of q_n(., d); for n = 5 cross-checked against r(d)^2.
double leading_coeff_q(FamilyId family, const ArcSpec& arc, double d);

FamilyIntervals admissible_interval(FamilyId family, const ArcSpec& arc);

// r(d) whose square is the leading coefficient of q_5(., d).
double quintic_r(const ArcSpec& arc, double d);

// The quartic f(d) whose root on (2-c, 3-3c+c^2) is the radial-optimal
// parabolic parameter.
Poly1 parabolic_quartic(const ArcSpec& arc);

// q_4 continued to the variable x = sqrt(1 - c*d); a polynomial in x used by
// the quartic sign-pattern and rejection checks (requires c > 0).
double quartic_r4(double t, double x, const ArcSpec& arc);

}  // namespace arcbest
