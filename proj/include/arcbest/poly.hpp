#pragma once

#include <utility>
#include <vector>

#include "arcbest/geometry.hpp"

namespace arcbest {

// Dense univariate polynomial in the power basis, ascending coefficients.
// The zero polynomial has an empty coefficient vector and degree -1.
class Poly1 {
public:
  Poly1() = default;
  explicit Poly1(std::vector<double> coeffs);

  static Poly1 constant(double v);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double operator[](int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0.0;
  }
  const std::vector<double>& coeffs() const { return c_; }

  double eval(double t) const;
  // Horner evaluation together with a running roundoff bound on the result.
  std::pair<double, double> eval_with_error_bound(double t) const;

  Poly1 derivative() const;

  friend Poly1 operator+(const Poly1& a, const Poly1& b);
  friend Poly1 operator-(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(double s, const Poly1& a);

  // Euclidean division: returns (quotient, remainder) with
  // num = quotient * den + remainder, deg(remainder) < deg(den).
  static std::pair<Poly1, Poly1> divmod(const Poly1& num, const Poly1& den);

private:
  void strip_trailing_zeros();
  std::vector<double> c_;
};

// Power-basis coefficients of B_j^n over [-1, 1].
Poly1 bernstein_poly(int n, int j);

// Power-basis coordinate polynomials x(t), y(t) of a Bezier curve.
std::pair<Poly1, Poly1> curve_power_coords(const BezierCurve2& curve);

}  // namespace arcbest
