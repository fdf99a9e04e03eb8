#pragma once

#include "arcbest/families.hpp"
#include "arcbest/geometry.hpp"

namespace arcbest {

enum class ErrorKind { radial, simplified };

const char* to_string(ErrorKind kind);
ErrorKind error_kind_from_string(const std::string& name);  // DomainError

// Symmetric error profile: extrema at -t1, 0, +t1 with values v1, v0, v1.
struct ErrorProfile {
  double t0 = 0.0;
  double t1 = 0.0;
  double v0 = 0.0;
  double v1 = 0.0;
  double max_abs = 0.0;
  int alternations = 0;
};

// Simplified radial error ||p(t)||^2 - 1 of the family curve.
double psi(FamilyId family, const ArcSpec& arc, double d, double t);

// Radial error ||p(t)|| - 1 == sqrt(psi + 1) - 1; same signs and zeros as psi.
double phi(FamilyId family, const ArcSpec& arc, double d, double t);

double psi_of_curve(const BezierCurve2& curve, double t);
double phi_of_psi(double psi_value);  // NumericalError if psi < -1

// Locate the interior extrema of the error (they are shared by phi and psi)
// and evaluate the profile under the requested kind.
ErrorProfile extrema(FamilyId family, const ArcSpec& arc, double d,
                     ErrorKind kind);

// Signed equioscillation defect v0 + v1; zero at the optimum.
double equioscillation_residual(const ErrorProfile& profile);

}  // namespace arcbest
