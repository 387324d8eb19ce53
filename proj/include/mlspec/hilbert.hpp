#pragma once

#include <variant>
#include <vector>

#include "mlspec/spectral.hpp"

namespace mlspec {

// Points closer than this to the boundary are rejected.
inline constexpr double kInteriorMargin = 1e-12;

// {x : (x - center)^t shape (x - center) < 1}, shape symmetric positive definite.
struct Ellipsoid {
  RealVector center;
  RealMatrix shape;
};

// <normal, x> < offset
struct Halfspace {
  RealVector normal;
  double offset = 0.0;
};

// Bounded intersection of open halfspaces. Not strictly convex, so geodesics
// need not be unique, but the distance itself is well defined.
struct Polytope {
  std::vector<Halfspace> halfspaces;
  RealVector interior;
};

class ConvexDomain {
 public:
  // Throws InvalidDomain unless shape is symmetric positive definite.
  static ConvexDomain ellipsoid(RealVector center, RealMatrix shape);
  // Throws InvalidDomain if the polytope is unbounded or the reference point
  // is not interior. Without a reference point the mean of the vertices is used.
  static ConvexDomain polytope(std::vector<Halfspace> halfspaces);
  static ConvexDomain polytope(std::vector<Halfspace> halfspaces, RealVector interior);
  static ConvexDomain unit_ball(int dim);
  // The open cube (-1, 1)^dim.
  static ConvexDomain cube(int dim);

  int dim() const;
  bool contains(const RealVector& x, double margin = kInteriorMargin) const;

  // Image under x -> linear * x + shift. Throws SingularMatrix.
  ConvexDomain transformed(const RealMatrix& linear, const RealVector& shift) const;

  const std::variant<Ellipsoid, Polytope>& shape() const { return shape_; }

 private:
  explicit ConvexDomain(std::variant<Ellipsoid, Polytope> s) : shape_(std::move(s)) {}
  std::variant<Ellipsoid, Polytope> shape_;
};

// The line p + t (q - p) meets the boundary at t_minus < 0 and t_plus > 1, so
// p separates p_inf from q.
struct Chord {
  RealVector p_inf;
  RealVector p;
  RealVector q;
  RealVector q_inf;
  double t_minus = 0.0;
  double t_plus = 0.0;
};

// Throws PointsCoincide, PointNotInterior, DimensionMismatch.
Chord chord_endpoints(const ConvexDomain& domain, const RealVector& p, const RealVector& q);

// log of the cross ratio (|q - p_inf| |p - q_inf|) / (|p - p_inf| |q - q_inf|);
// zero when p == q. Throws PointNotInterior.
double hilbert_distance(const ConvexDomain& domain, const RealVector& p, const RealVector& q);

// Translation length read off the invariant segment between the attracting
// and repelling fixed points: with x the chart midpoint of that segment,
// the cross-ratio distance from x to M x along it. Throws NotProximal.
double axis_translation_length(const RealMatrix& m, const RealMatrix& m_inverse,
                               double tol = kDefaultProximalTolerance);
double axis_translation_length(const SquareMatrix& m, double tol = kDefaultProximalTolerance);

}  // namespace mlspec
