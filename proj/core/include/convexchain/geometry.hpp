#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace convexchain {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

/// Line A*x + B*y = C with (A,B) normalized to unit length.
struct Line {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  Line(double a_, double b_, double c_);

  static Line through(const Point& p, const Point& q);

  /// Signed distance from the point to the line (positive on the (A,B) side).
  double signedDistance(const Point& p) const { return a * p.x + b * p.y - c; }
};

std::optional<Point> intersect(const Line& l1, const Line& l2);

/// Sign of the signed area of (p,q,r): +1 for a counter-clockwise turn,
/// -1 for clockwise, 0 when collinear within a relative 1e-12 tolerance.
int orientation(const Point& p, const Point& q, const Point& r);

/// Slope of the segment p->q. Throws std::domain_error on a vertical segment.
double slope(const Point& p, const Point& q);

/// Positively oriented (counter-clockwise) triangle. Construction rejects
/// degenerate or clockwise vertex triples.
class Triangle {
 public:
  Triangle(const Point& v0, const Point& v1, const Point& v2);

  /// The triangle with vertices (0,1), (0,0), (1,0).
  static Triangle standard();

  const Point& v0() const { return v0_; }
  const Point& v1() const { return v1_; }
  const Point& v2() const { return v2_; }

  double area() const;

  /// Closed-triangle membership with an absolute tolerance on the
  /// edge-distance sign.
  bool contains(const Point& p, double tol = 1e-12) const;

 private:
  Point v0_, v1_, v2_;
};

/// Affine map p -> M*p + t with invertible linear part M.
class AffineMap {
 public:
  AffineMap(double m00, double m01, double m10, double m11, const Point& t);

  static AffineMap identity();

  Point operator()(const Point& p) const {
    return {m00_ * p.x + m01_ * p.y + t_.x, m10_ * p.x + m11_ * p.y + t_.y};
  }

  Triangle operator()(const Triangle& T) const;

  AffineMap inverse() const;
  double determinant() const { return m00_ * m11_ - m01_ * m10_; }

  double m00() const { return m00_; }
  double m01() const { return m01_; }
  double m10() const { return m10_; }
  double m11() const { return m11_; }
  const Point& translation() const { return t_; }

 private:
  double m00_, m01_, m10_, m11_;
  Point t_;
};

/// The unique affine map sending v0,v1,v2 of T to (0,1),(0,0),(1,0).
AffineMap mapToStandard(const Triangle& T);

/// Member of the homothetic parabola family sqrt(x)+sqrt(y) = sqrt(1+r),
/// r in (-1,3). r = 0 is the special parabola inscribed in the standard
/// triangle, tangent to the legs at (0,1) and (1,0).
///
/// Parametrized as q(u) = ((1+r)*u^2, (1+r)*(1-u)^2) for u in [0,1]; the
/// tangent at q(u) is x/u + y/(1-u) = 1+r, rational in u.
class Parabola {
 public:
  explicit Parabola(double r = 0.0);

  double r() const { return r_; }

  Point point(double u) const;
  Line tangent(double u) const;

 private:
  double r_;
};

/// Distance between the parallel tangents of Gamma and Gamma_r at parameter
/// u, i.e. |r| / sqrt(1/a + 1/b) with a = u^2, b = (1-u)^2.
double parallelTangentDistance(double r, double u);

/// Triangle bounded by the tangents to Gamma at u1 and u2 and the chord
/// between the tangency points. The endpoint tangents u=0 and u=1 are the
/// legs x=0 and y=0 of the standard triangle.
Triangle tangentTriangle(double u1, double u2);

/// Subdivide the standard triangle along Gamma into tangent triangles of
/// area t each (the last one possibly smaller). Division parameters are
/// found by bisection on u.
std::vector<Triangle> equalAreaSubdivision(double t);

/// Q = 1 - cbrt(a*b*c) - cbrt((1-a)*(1-b)*(1-c)).
double blaschkeDeficit(double a, double b, double c);

/// Euclidean distance from p to the arc of Gamma_r with u in [0,1].
/// Coarse parameter scan followed by golden-section refinement; the
/// squared distance in u is a quartic, so a 64-cell scan brackets every
/// local minimum.
double distanceToParabolaArc(const Point& p, double r = 0.0);

struct HausdorffOptions {
  int arcSamples = 10000;
  /// Sampling density along the polyline, samples per unit length.
  int polylineSamplesPerUnit = 4096;
};

/// Hausdorff distance between the polyline p0 -> chain -> p2 (chain points
/// given in triangle T, mapped to standard position and sorted by x) and
/// the arc of Gamma_r inside the standard triangle. The arc is sampled
/// densely; point-to-segment distances are exact.
double hausdorffDistanceToParabola(std::span<const Point> chain,
                                   const Triangle& T, double r = 0.0,
                                   const HausdorffOptions& opts = {});

}  // namespace convexchain
