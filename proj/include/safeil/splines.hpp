#pragma once

#include <span>
#include <vector>

#include "safeil/geometry.hpp"

namespace safeil {

// Clamped (open) knot vector on [0, 1]. The first degree+1 knots are 0 and the
// last degree+1 knots are 1, so the curve interpolates its end control points.
class KnotVector {
 public:
  KnotVector(std::vector<double> knots, int degree);

  // Open uniform knot vector for n control points: degree+1 zeros, evenly
  // spaced interior knots, degree+1 ones.
  static KnotVector open_uniform(int num_coeffs, int degree);

  // The cubic [0,0,0,0,1,1,1,1] vector used for planned trajectories.
  static KnotVector cubic_bezier();

  int degree() const { return degree_; }
  int num_knots() const { return static_cast<int>(knots_.size()); }
  int num_coeffs() const { return num_knots() - degree_ - 1; }
  double knot(int i) const { return knots_[static_cast<size_t>(i)]; }
  const std::vector<double>& knots() const { return knots_; }

  bool operator==(const KnotVector& o) const = default;

 private:
  std::vector<double> knots_;
  int degree_;
};

// Cox-de Boor basis function B_i(tau). tau = 1 is evaluated with the
// left-limit convention so the last basis stays 1 at the end of the domain.
double basis_eval(const KnotVector& kv, int i, double tau);

// Greville abscissa of each control point, scaled to seconds: the mean of the
// degree knots following knot i, times the horizon.
std::vector<double> greville_times(const KnotVector& kv, double horizon_s);

// Planned 2-D trajectory over normalized time. Control points are in the
// ego-local frame at plan time; the first one is pinned to the origin.
class BSpline2D {
 public:
  BSpline2D(KnotVector kv, std::vector<Vec2> control_points, double horizon_s);

  Vec2 eval(double tau) const;

  const KnotVector& knots() const { return knots_; }
  const std::vector<Vec2>& control_points() const { return control_points_; }
  double horizon_s() const { return horizon_s_; }

 private:
  KnotVector knots_;
  std::vector<Vec2> control_points_;
  double horizon_s_;
};

struct TimedPoint {
  double t = 0.0;  // seconds, in [0, horizon]
  double x = 0.0;
  double y = 0.0;
};

// Least-squares fit of the free control points (the first stays at the
// origin), via normal equations with a small ridge term for conditioning.
BSpline2D fit_spline(std::span<const TimedPoint> points, double horizon_s,
                     const KnotVector& kv);

// True iff `samples` uniformly spaced curve points all lie inside the convex
// hull of the control points (tolerance 1e-9 m, degenerate hulls included).
bool in_convex_hull(const BSpline2D& spline, int samples);

}  // namespace safeil
