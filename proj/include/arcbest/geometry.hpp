#pragma once

#include <vector>

#include "arcbest/errors.hpp"

namespace arcbest {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

// Reflection over the first coordinate axis.
inline Point2 reflect_x(Point2 p) { return {p.x, -p.y}; }

double norm2(Point2 p);
double sq_dist(Point2 a, Point2 b);

// Unit circular arc centered at the origin, symmetric about the x axis,
// spanning angles [-half_angle, half_angle].
struct ArcSpec {
  double half_angle = 0.0;
  double c = 0.0;  // cos(half_angle)
  double s = 0.0;  // sin(half_angle)
};

// Smallest supported half-angle; below it the interpolation families
// degenerate (parameter intervals collapse to roundoff width).
inline constexpr double kMinHalfAngle = 1e-6;

ArcSpec make_arc(double half_angle);

// Planar Bezier curve of the given degree with control points in the
// Bernstein basis over [-1, 1].
struct BezierCurve2 {
  int degree = 0;
  std::vector<Point2> control_points;  // size degree + 1
};

// Bernstein polynomial B_j^n over [-1, 1].
double bernstein(int n, int j, double t);

// de Casteljau evaluation; exact at t = +-1 (returns the end control points).
Point2 eval_curve(const BezierCurve2& curve, double t);

// Symmetric Hausdorff distance estimate between the curve and the arc.
// Curve -> arc uses the analytic arc distance on sampled curve points;
// arc -> curve refines the nearest sampled curve point with a golden-section
// search over the curve parameter.
double hausdorff_to_unit_circle_arc(const BezierCurve2& curve,
                                    const ArcSpec& arc, int samples);

}  // namespace arcbest
