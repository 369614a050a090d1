#include "convexchain/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace convexchain {

namespace {

constexpr double kOrientEps = 1e-12;

bool finitePoint(const Point& p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

double shoelace(const Point& a, const Point& b, const Point& c) {
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

}  // namespace

Line::Line(double a_, double b_, double c_) {
  const double norm = std::hypot(a_, b_);
  if (norm == 0.0 || !std::isfinite(norm)) {
    throw std::invalid_argument("Line: (A,B) must be nonzero and finite");
  }
  a = a_ / norm;
  b = b_ / norm;
  c = c_ / norm;
}

Line Line::through(const Point& p, const Point& q) {
  // Normal is the rotated direction; C fixed by incidence.
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  return Line(-dy, dx, -dy * p.x + dx * p.y);
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
  const double det = l1.a * l2.b - l1.b * l2.a;
  if (std::abs(det) < 1e-14) return std::nullopt;
  return Point{(l1.c * l2.b - l1.b * l2.c) / det,
               (l1.a * l2.c - l1.c * l2.a) / det};
}

int orientation(const Point& p, const Point& q, const Point& r) {
  if (!finitePoint(p) || !finitePoint(q) || !finitePoint(r)) {
    throw std::invalid_argument("orientation: coordinates must be finite");
  }
  const double cross =
      (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  const double scale = std::abs((q.x - p.x) * (r.y - p.y)) +
                       std::abs((q.y - p.y) * (r.x - p.x));
  if (std::abs(cross) <= kOrientEps * scale) return 0;
  return cross > 0.0 ? 1 : -1;
}

double slope(const Point& p, const Point& q) {
  if (p.x == q.x) {
    throw std::domain_error("slope: vertical segment");
  }
  return (q.y - p.y) / (q.x - p.x);
}

Triangle::Triangle(const Point& v0, const Point& v1, const Point& v2)
    : v0_(v0), v1_(v1), v2_(v2) {
  if (!finitePoint(v0) || !finitePoint(v1) || !finitePoint(v2)) {
    throw std::invalid_argument("Triangle: vertices must be finite");
  }
  if (orientation(v0, v1, v2) <= 0) {
    throw std::invalid_argument(
        "Triangle: vertices must be in strict counter-clockwise order");
  }
}

Triangle Triangle::standard() {
  return Triangle({0.0, 1.0}, {0.0, 0.0}, {1.0, 0.0});
}

double Triangle::area() const { return shoelace(v0_, v1_, v2_); }

bool Triangle::contains(const Point& p, double tol) const {
  // CCW triangle: inside iff weakly left of every directed edge.
  const auto side = [&](const Point& a, const Point& b) {
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    return ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)) / len;
  };
  return side(v0_, v1_) >= -tol && side(v1_, v2_) >= -tol &&
         side(v2_, v0_) >= -tol;
}

AffineMap::AffineMap(double m00, double m01, double m10, double m11,
                     const Point& t)
    : m00_(m00), m01_(m01), m10_(m10), m11_(m11), t_(t) {
  const double det = m00 * m11 - m01 * m10;
  if (det == 0.0 || !std::isfinite(det)) {
    throw std::invalid_argument("AffineMap: linear part must be invertible");
  }
}

AffineMap AffineMap::identity() {
  return AffineMap(1.0, 0.0, 0.0, 1.0, {0.0, 0.0});
}

Triangle AffineMap::operator()(const Triangle& T) const {
  return Triangle((*this)(T.v0()), (*this)(T.v1()), (*this)(T.v2()));
}

AffineMap AffineMap::inverse() const {
  const double det = determinant();
  const double i00 = m11_ / det;
  const double i01 = -m01_ / det;
  const double i10 = -m10_ / det;
  const double i11 = m00_ / det;
  return AffineMap(i00, i01, i10, i11,
                   {-(i00 * t_.x + i01 * t_.y), -(i10 * t_.x + i11 * t_.y)});
}

AffineMap mapToStandard(const Triangle& T) {
  // Solve M*(v0-v1) = (0,1), M*(v2-v1) = (1,0), t = -M*v1.
  const double ax = T.v0().x - T.v1().x, ay = T.v0().y - T.v1().y;
  const double bx = T.v2().x - T.v1().x, by = T.v2().y - T.v1().y;
  const double det = ax * by - ay * bx;
  // M = [[0,1],[1,0]] * inv([a b])  (columns a=v0-v1, b=v2-v1).
  const double m00 = -ay / det, m01 = ax / det;
  const double m10 = by / det, m11 = -bx / det;
  return AffineMap(m00, m01, m10, m11,
                   {-(m00 * T.v1().x + m01 * T.v1().y),
                    -(m10 * T.v1().x + m11 * T.v1().y)});
}

Parabola::Parabola(double r) : r_(r) {
  if (!(r > -1.0 && r < 3.0)) {
    throw std::invalid_argument("Parabola: r must lie in (-1, 3)");
  }
}

Point Parabola::point(double u) const {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::domain_error("Parabola::point: u must lie in [0,1]");
  }
  const double s = 1.0 + r_;
  return {s * u * u, s * (1.0 - u) * (1.0 - u)};
}

Line Parabola::tangent(double u) const {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("Parabola::tangent: u must lie in (0,1)");
  }
  return Line(1.0 / u, 1.0 / (1.0 - u), 1.0 + r_);
}

double parallelTangentDistance(double r, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw std::domain_error("parallelTangentDistance: u must lie in (0,1)");
  }
  if (!(r > -1.0 && r < 3.0)) {
    throw std::domain_error("parallelTangentDistance: r must lie in (-1,3)");
  }
  const double a = u * u;
  const double b = (1.0 - u) * (1.0 - u);
  return std::abs(r) / std::sqrt(1.0 / a + 1.0 / b);
}

Triangle tangentTriangle(double u1, double u2) {
  if (!(u1 >= 0.0 && u1 < u2 && u2 <= 1.0)) {
    throw std::invalid_argument("tangentTriangle: need 0 <= u1 < u2 <= 1");
  }
  const Parabola gamma(0.0);
  const Line l1 = (u1 == 0.0) ? Line(1.0, 0.0, 0.0) : gamma.tangent(u1);
  const Line l2 = (u2 == 1.0) ? Line(0.0, 1.0, 0.0) : gamma.tangent(u2);
  const auto apex = intersect(l1, l2);
  if (!apex) {
    throw std::invalid_argument("tangentTriangle: tangents are parallel");
  }
  // Chord endpoints play the roles of p0 and p2, the apex the role of p1.
  return Triangle(gamma.point(u1), *apex, gamma.point(u2));
}

std::vector<Triangle> equalAreaSubdivision(double t) {
  const double total = Triangle::standard().area();
  if (!(t > 0.0 && t < total)) {
    throw std::invalid_argument("equalAreaSubdivision: t out of range");
  }
  constexpr double kAreaTol = 1e-10;
  constexpr int kMaxIter = 200;

  std::vector<Triangle> out;
  double u = 0.0;
  while (true) {
    const double remaining = tangentTriangle(u, 1.0).area();
    if (remaining <= t + kAreaTol) {
      out.push_back(tangentTriangle(u, 1.0));
      break;
    }
    // Area of tangentTriangle(u, hi) is increasing in hi.
    double lo = u, hi = 1.0;
    for (int i = 0; i < kMaxIter; ++i) {
      const double mid = 0.5 * (lo + hi);
      const double a = tangentTriangle(u, mid).area();
      if (std::abs(a - t) <= kAreaTol) {
        hi = mid;
        break;
      }
      (a < t ? lo : hi) = mid;
    }
    out.push_back(tangentTriangle(u, hi));
    u = hi;
  }
  return out;
}

double blaschkeDeficit(double a, double b, double c) {
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0 && c >= 0.0 && c <= 1.0)) {
    throw std::domain_error("blaschkeDeficit: arguments must lie in [0,1]");
  }
  return 1.0 - std::cbrt(a * b * c) -
         std::cbrt((1.0 - a) * (1.0 - b) * (1.0 - c));
}

namespace {

double distSqToArcAt(const Point& p, double s, double u) {
  const double dx = s * u * u - p.x;
  const double dy = s * (1.0 - u) * (1.0 - u) - p.y;
  return dx * dx + dy * dy;
}

// Golden-section minimization of the squared distance on [lo, hi].
double refineArcDistance(const Point& p, double s, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = distSqToArcAt(p, s, x1);
  double f2 = distSqToArcAt(p, s, x2);
  for (int i = 0; i < 60 && b - a > 1e-14; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = distSqToArcAt(p, s, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = distSqToArcAt(p, s, x2);
    }
  }
  return std::sqrt(distSqToArcAt(p, s, 0.5 * (a + b)));
}

double pointToSegmentDistance(const Point& p, const Point& a, const Point& b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = 0.0;
  if (len2 > 0.0) {
    t = std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
  }
  const double dx = a.x + t * vx - p.x;
  const double dy = a.y + t * vy - p.y;
  return std::hypot(dx, dy);
}

}  // namespace

double distanceToParabolaArc(const Point& p, double r) {
  const double s = 1.0 + r;
  constexpr int kCells = 64;
  // Squared distance is quartic in u: a 64-cell scan isolates every local
  // minimum; refine the best cell and its neighbours.
  double best = std::numeric_limits<double>::infinity();
  int bestIdx = 0;
  for (int i = 0; i <= kCells; ++i) {
    const double d = distSqToArcAt(p, s, static_cast<double>(i) / kCells);
    if (d < best) {
      best = d;
      bestIdx = i;
    }
  }
  const double lo = std::max(0.0, (bestIdx - 1.0) / kCells);
  const double hi = std::min(1.0, (bestIdx + 1.0) / kCells);
  return refineArcDistance(p, s, lo, hi);
}

double hausdorffDistanceToParabola(std::span<const Point> chain,
                                   const Triangle& T, double r,
                                   const HausdorffOptions& opts) {
  const AffineMap toStd = mapToStandard(T);
  const Triangle std_tri = Triangle::standard();

  std::vector<Point> poly;
  poly.reserve(chain.size() + 2);
  poly.push_back({0.0, 1.0});
  for (const Point& p : chain) poly.push_back(toStd(p));
  std::sort(poly.begin() + 1, poly.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  poly.push_back({1.0, 0.0});

  const Parabola gamma(r);
  std::vector<Point> arc;
  arc.reserve(opts.arcSamples + 1);
  for (int i = 0; i <= opts.arcSamples; ++i) {
    const Point q = gamma.point(static_cast<double>(i) / opts.arcSamples);
    if (std_tri.contains(q, 1e-9)) arc.push_back(q);
  }
  if (arc.empty()) {
    throw std::invalid_argument(
        "hausdorffDistanceToParabola: arc does not meet the triangle");
  }

  double h = 0.0;
  // Arc to polyline: exact point-to-segment distances.
  for (const Point& q : arc) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
      d = std::min(d, pointToSegmentDistance(q, poly[i], poly[i + 1]));
    }
    h = std::max(h, d);
  }
  // Polyline to arc: dense samples along each segment, refined arc distance.
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[i + 1];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    const int m = std::max(1, static_cast<int>(
                                  std::ceil(len * opts.polylineSamplesPerUnit)));
    for (int j = 0; j <= m; ++j) {
      const double t = static_cast<double>(j) / m;
      const Point q{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
      h = std::max(h, distanceToParabolaArc(q, r));
    }
  }
  return h;
}

}  // namespace convexchain
