#pragma once

// Euclidean primitives for the plane: lines, circles, intersections,
// reflections and inversions. Everything is templated on the scalar type and
// aliased for double, which is what the rest of the library uses.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "hypmid/errors.hpp"

namespace hypmid {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
struct Tolerance {
  Scalar eps_incidence = Scalar(1e-9);   // assertions: "is this satisfied?"
  Scalar eps_degenerate = Scalar(1e-12); // branch decisions: "is this degenerate?"

  bool valid() const { return eps_degenerate > Scalar(0) && eps_degenerate <= eps_incidence; }
};

template <typename Scalar>
Scalar cross2(const Vector2<Scalar>& a, const Vector2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Counter-clockwise quarter turn.
template <typename Scalar>
Vector2<Scalar> perp(const Vector2<Scalar>& v) {
  return Vector2<Scalar>(-v.y(), v.x());
}

/// max(1, |p|, |q|, ...): magnitude used to make thresholds scale-aware.
template <typename Scalar, typename... Rest>
Scalar magnitude_scale(const Point2<Scalar>& p, const Rest&... rest) {
  Scalar s = std::max(Scalar(1), p.norm());
  ((s = std::max(s, rest.norm())), ...);
  return s;
}

/// Line {p : n·p = c} with |n| = 1.
template <typename Scalar>
class Line2 {
 public:
  Line2(const Vector2<Scalar>& normal, Scalar offset) {
    const Scalar len = normal.norm();
    if (!(len > Scalar(0)) || !std::isfinite(len)) {
      throw GeometryError(ErrorKind::DegenerateInput, "line normal must be nonzero");
    }
    normal_ = normal / len;
    offset_ = offset / len;
  }

  const Vector2<Scalar>& normal() const { return normal_; }
  Scalar offset() const { return offset_; }
  Vector2<Scalar> direction() const { return perp(normal_); }
  /// Foot of the perpendicular from the origin.
  Point2<Scalar> anchor() const { return normal_ * offset_; }
  Scalar signed_distance(const Point2<Scalar>& p) const { return normal_.dot(p) - offset_; }

 private:
  Vector2<Scalar> normal_;
  Scalar offset_;
};

/// S¹(center, radius); radius is strictly positive.
template <typename Scalar>
class Circle2 {
 public:
  Circle2(const Point2<Scalar>& center, Scalar radius) : center_(center), radius_(radius) {
    if (!(radius > Scalar(0)) || !std::isfinite(radius) || !center.allFinite()) {
      throw GeometryError(ErrorKind::DegenerateInput, "circle radius must be positive and finite");
    }
  }

  const Point2<Scalar>& center() const { return center_; }
  Scalar radius() const { return radius_; }

  static Circle2 unit() { return Circle2(Point2<Scalar>::Zero(), Scalar(1)); }

 private:
  Point2<Scalar> center_;
  Scalar radius_;
};

template <typename Scalar>
using Carrier = std::variant<Line2<Scalar>, Circle2<Scalar>>;

using Point2d = Point2<double>;
using Vector2d = Vector2<double>;
using Line2d = Line2<double>;
using Circle2d = Circle2<double>;
using Carrier2d = Carrier<double>;
using Toleranced = Tolerance<double>;

template <typename Scalar>
Line2<Scalar> real_axis() {
  return Line2<Scalar>(Vector2<Scalar>(0, 1), Scalar(0));
}

// ---------------------------------------------------------------------------
// Ruler and compass

template <typename Scalar>
Line2<Scalar> line_through(const Point2<Scalar>& p, const Point2<Scalar>& q,
                           const Tolerance<Scalar>& tol = {}) {
  const Vector2<Scalar> d = q - p;
  if (d.norm() <= tol.eps_degenerate * magnitude_scale(p, q)) {
    throw GeometryError(ErrorKind::DegenerateInput, "line through coincident points");
  }
  const Vector2<Scalar> n = perp(d).normalized();
  // Offset from the midpoint keeps both residuals symmetric.
  return Line2<Scalar>(n, n.dot((p + q) / Scalar(2)));
}

template <typename Scalar>
Line2<Scalar> perpendicular_through(const Line2<Scalar>& l, const Point2<Scalar>& p) {
  const Vector2<Scalar> n = l.direction();
  return Line2<Scalar>(n, n.dot(p));
}

template <typename Scalar>
Circle2<Scalar> circle_on_diameter(const Point2<Scalar>& p, const Point2<Scalar>& q,
                                   const Tolerance<Scalar>& tol = {}) {
  const Scalar d = (p - q).norm();
  if (d <= tol.eps_degenerate * magnitude_scale(p, q)) {
    throw GeometryError(ErrorKind::DegenerateInput, "diameter endpoints coincide");
  }
  return Circle2<Scalar>((p + q) / Scalar(2), d / Scalar(2));
}

/// Compass: circle centred at `center` passing through `p`.
template <typename Scalar>
Circle2<Scalar> circle_center_through(const Point2<Scalar>& center, const Point2<Scalar>& p,
                                      const Tolerance<Scalar>& tol = {}) {
  const Scalar r = (p - center).norm();
  if (r <= tol.eps_degenerate * magnitude_scale(p, center)) {
    throw GeometryError(ErrorKind::DegenerateInput, "circle through its own center");
  }
  return Circle2<Scalar>(center, r);
}

template <typename Scalar>
Circle2<Scalar> circle_through(const Point2<Scalar>& p, const Point2<Scalar>& q,
                               const Point2<Scalar>& r, const Tolerance<Scalar>& tol = {}) {
  const Vector2<Scalar> b = q - p;
  const Vector2<Scalar> c = r - p;
  const Scalar longest = std::max({b.norm(), c.norm(), (r - q).norm()});
  const Scalar area2 = cross2(b, c);
  if (longest <= tol.eps_degenerate * magnitude_scale(p, q, r) ||
      std::abs(area2) <= tol.eps_degenerate * longest * longest) {
    throw GeometryError(ErrorKind::CollinearPoints, "circle through collinear points");
  }
  const Scalar b2 = b.squaredNorm();
  const Scalar c2 = c.squaredNorm();
  const Vector2<Scalar> u((c.y() * b2 - b.y() * c2) / (Scalar(2) * area2),
                          (b.x() * c2 - c.x() * b2) / (Scalar(2) * area2));
  return Circle2<Scalar>(p + u, u.norm());
}

template <typename Scalar>
Point2<Scalar> euclidean_midpoint(const Point2<Scalar>& p, const Point2<Scalar>& q) {
  return (p + q) / Scalar(2);
}

// ---------------------------------------------------------------------------
// Selectors for two-root intersections

template <typename Scalar>
struct Selector {
  enum class Kind {
    Unique,          // exactly one distinct candidate
    UpperHalfPlane,  // x2 > 0
    LowerHalfPlane,  // x2 < 0
    InsideUnitDisk,  // |p| < 1
    OutsideUnitDisk, // |p| > 1
    OnRealAxis,      // x2 = 0
    NearestTo,       // closest to p
    CloserTo,        // |e - p| < |e - q|: on p's side of the bisector of [p, q]
    LeftOf,          // left of the directed line p -> q
    RightOf,         // right of the directed line p -> q
  };

  Kind kind = Kind::Unique;
  Point2<Scalar> p = Point2<Scalar>::Zero();
  Point2<Scalar> q = Point2<Scalar>::Zero();

  static Selector unique() { return {Kind::Unique}; }
  static Selector upper() { return {Kind::UpperHalfPlane}; }
  static Selector lower() { return {Kind::LowerHalfPlane}; }
  static Selector inside_unit_disk() { return {Kind::InsideUnitDisk}; }
  static Selector outside_unit_disk() { return {Kind::OutsideUnitDisk}; }
  static Selector on_real_axis() { return {Kind::OnRealAxis}; }
  static Selector nearest_to(const Point2<Scalar>& target) { return {Kind::NearestTo, target}; }
  static Selector closer_to(const Point2<Scalar>& p, const Point2<Scalar>& than) {
    return {Kind::CloserTo, p, than};
  }
  static Selector left_of(const Point2<Scalar>& a, const Point2<Scalar>& b) {
    return {Kind::LeftOf, a, b};
  }
  static Selector right_of(const Point2<Scalar>& a, const Point2<Scalar>& b) {
    return {Kind::RightOf, a, b};
  }
};

using Selectord = Selector<double>;

template <typename Scalar>
bool selector_accepts(const Selector<Scalar>& s, const Point2<Scalar>& e,
                      const Tolerance<Scalar>& tol) {
  using K = typename Selector<Scalar>::Kind;
  switch (s.kind) {
    case K::Unique:
    case K::NearestTo: return true;
    case K::UpperHalfPlane: return e.y() > Scalar(0);
    case K::LowerHalfPlane: return e.y() < Scalar(0);
    case K::InsideUnitDisk: return e.squaredNorm() < Scalar(1);
    case K::OutsideUnitDisk: return e.squaredNorm() > Scalar(1);
    case K::OnRealAxis: return std::abs(e.y()) <= tol.eps_incidence * magnitude_scale(e);
    case K::CloserTo: return (e - s.p).squaredNorm() < (e - s.q).squaredNorm();
    case K::LeftOf: return cross2<Scalar>(s.q - s.p, e - s.p) > Scalar(0);
    case K::RightOf: return cross2<Scalar>(s.q - s.p, e - s.p) < Scalar(0);
  }
  return false;
}

/// Picks exactly one candidate; AmbiguousSelection when zero or several qualify.
template <typename Scalar>
Point2<Scalar> select_point(const std::vector<Point2<Scalar>>& candidates,
                            const Selector<Scalar>& s, const Tolerance<Scalar>& tol = {}) {
  using K = typename Selector<Scalar>::Kind;
  if (s.kind == K::NearestTo) {
    if (candidates.empty()) {
      throw GeometryError(ErrorKind::AmbiguousSelection, "no candidate to select");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      if ((candidates[i] - s.p).norm() < (candidates[best] - s.p).norm()) best = i;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (i == best) continue;
      const Scalar gap = (candidates[i] - s.p).norm() - (candidates[best] - s.p).norm();
      if (gap <= tol.eps_degenerate * magnitude_scale(candidates[i], candidates[best], s.p)) {
        throw GeometryError(ErrorKind::AmbiguousSelection, "candidates equidistant from target");
      }
    }
    return candidates[best];
  }
  std::vector<Point2<Scalar>> hits;
  for (const auto& e : candidates) {
    if (selector_accepts(s, e, tol)) hits.push_back(e);
  }
  if (hits.size() != 1) {
    throw GeometryError(ErrorKind::AmbiguousSelection,
                        std::to_string(hits.size()) + " candidates match the selector");
  }
  return hits.front();
}

// ---------------------------------------------------------------------------
// Intersections

template <typename Scalar>
Point2<Scalar> intersect_line_line(const Line2<Scalar>& a, const Line2<Scalar>& b,
                                   const Tolerance<Scalar>& tol = {}) {
  const Scalar det = cross2(a.normal(), b.normal());
  if (std::abs(det) <= tol.eps_degenerate) {
    throw GeometryError(ErrorKind::ParallelLines, "lines are parallel");
  }
  return Point2<Scalar>((a.offset() * b.normal().y() - b.offset() * a.normal().y()) / det,
                        (a.normal().x() * b.offset() - b.normal().x() * a.offset()) / det);
}

/// All (one or two) points of l ∩ c.
template <typename Scalar>
std::vector<Point2<Scalar>> line_circle_points(const Line2<Scalar>& l, const Circle2<Scalar>& c,
                                               const Tolerance<Scalar>& tol = {}) {
  const Scalar s = l.signed_distance(c.center());
  const Scalar r = c.radius();
  const Scalar scale = std::max(Scalar(1), r);
  if (std::abs(s) > r + tol.eps_incidence * scale) {
    throw GeometryError(ErrorKind::NoIntersection, "line misses circle");
  }
  const Point2<Scalar> foot = c.center() - s * l.normal();
  const Scalar as = std::abs(s);
  const Scalar h = as < r ? std::sqrt((r - as) * (r + as)) : Scalar(0);
  if (h <= tol.eps_degenerate * magnitude_scale(foot)) return {foot};
  const Vector2<Scalar> t = l.direction();
  return {foot + h * t, foot - h * t};
}

template <typename Scalar>
Point2<Scalar> intersect_line_circle(const Line2<Scalar>& l, const Circle2<Scalar>& c,
                                     const Selector<Scalar>& sel,
                                     const Tolerance<Scalar>& tol = {}) {
  return select_point(line_circle_points(l, c, tol), sel, tol);
}

/// All (one or two) points of a ∩ b.
template <typename Scalar>
std::vector<Point2<Scalar>> circle_circle_points(const Circle2<Scalar>& a, const Circle2<Scalar>& b,
                                                 const Tolerance<Scalar>& tol = {}) {
  const Vector2<Scalar> delta = b.center() - a.center();
  const Scalar d = delta.norm();
  const Scalar ra = a.radius();
  const Scalar rb = b.radius();
  const Scalar scale = std::max({Scalar(1), ra, rb});
  if (d <= tol.eps_degenerate * scale) {
    throw GeometryError(ErrorKind::ConcentricCircles, "circles share a center");
  }
  if (d > ra + rb + tol.eps_incidence * scale ||
      d < std::abs(ra - rb) - tol.eps_incidence * scale) {
    throw GeometryError(ErrorKind::NoIntersection, "circles do not meet");
  }
  // Work from the smaller circle: its distance to the radical line is
  // ((d − r_L)(d + r_L) + r_s²) / 2d, and the chord half-length comes from
  // r_s. From the larger circle, r_L − along cancels and loses ~eps·r_L²,
  // which matters for the near-diameter carriers of huge radius.
  const bool a_small = ra <= rb;
  const Point2<Scalar>& cs = a_small ? a.center() : b.center();
  const Scalar rs = a_small ? ra : rb;
  const Scalar rl = a_small ? rb : ra;
  const Vector2<Scalar> u = (a_small ? delta : Vector2<Scalar>(-delta)) / d;
  const Scalar along = ((d - rl) * (d + rl) + rs * rs) / (Scalar(2) * d);
  const Scalar aa = std::abs(along);
  const Scalar h = aa < rs ? std::sqrt((rs - aa) * (rs + aa)) : Scalar(0);
  const Point2<Scalar> base = cs + along * u;
  if (h <= tol.eps_degenerate * magnitude_scale(base)) return {base};
  // Same order as seen from a: left of a→b first.
  const Vector2<Scalar> n = a_small ? perp(u) : Vector2<Scalar>(-perp(u));
  return {base + h * n, base - h * n};
}

template <typename Scalar>
Point2<Scalar> intersect_circle_circle(const Circle2<Scalar>& a, const Circle2<Scalar>& b,
                                       const Selector<Scalar>& sel,
                                       const Tolerance<Scalar>& tol = {}) {
  return select_point(circle_circle_points(a, b, tol), sel, tol);
}

/// Line/circle agnostic intersection.
template <typename Scalar>
std::vector<Point2<Scalar>> intersection_points(const Carrier<Scalar>& a, const Carrier<Scalar>& b,
                                                const Tolerance<Scalar>& tol = {}) {
  return std::visit(
      [&](const auto& lhs, const auto& rhs) -> std::vector<Point2<Scalar>> {
        using L = std::decay_t<decltype(lhs)>;
        using R = std::decay_t<decltype(rhs)>;
        if constexpr (std::is_same_v<L, Line2<Scalar>> && std::is_same_v<R, Line2<Scalar>>) {
          return {intersect_line_line(lhs, rhs, tol)};
        } else if constexpr (std::is_same_v<L, Line2<Scalar>>) {
          return line_circle_points(lhs, rhs, tol);
        } else if constexpr (std::is_same_v<R, Line2<Scalar>>) {
          return line_circle_points(rhs, lhs, tol);
        } else {
          return circle_circle_points(lhs, rhs, tol);
        }
      },
      a, b);
}

template <typename Scalar>
Point2<Scalar> intersect(const Carrier<Scalar>& a, const Carrier<Scalar>& b,
                         const Selector<Scalar>& sel, const Tolerance<Scalar>& tol = {}) {
  return select_point(intersection_points(a, b, tol), sel, tol);
}

// ---------------------------------------------------------------------------
// Reflections and inversions

/// x* = x / |x|², inversion in the unit circle.
template <typename Scalar>
Point2<Scalar> invert_unit(const Point2<Scalar>& p, const Tolerance<Scalar>& tol = {}) {
  const Scalar n2 = p.squaredNorm();
  if (std::sqrt(n2) <= tol.eps_degenerate) {
    throw GeometryError(ErrorKind::OriginInversion, "cannot invert the origin");
  }
  return p / n2;
}

/// Reflection in the line {x : x·a = t}.
template <typename Scalar>
Point2<Scalar> reflect_in_line(const Point2<Scalar>& p, const Vector2<Scalar>& a, Scalar t) {
  const Scalar a2 = a.squaredNorm();
  if (!(a2 > Scalar(0))) {
    throw GeometryError(ErrorKind::DegenerateInput, "reflection normal is zero");
  }
  return p - Scalar(2) * (p.dot(a) - t) * a / a2;
}

template <typename Scalar>
Point2<Scalar> reflect_in_line(const Point2<Scalar>& p, const Line2<Scalar>& l) {
  return reflect_in_line<Scalar>(p, l.normal(), l.offset());
}

/// Complex conjugation, x̄.
template <typename Scalar>
Point2<Scalar> reflect_real(const Point2<Scalar>& p) {
  return Point2<Scalar>(p.x(), -p.y());
}

template <typename Scalar>
Point2<Scalar> invert_in_circle(const Point2<Scalar>& p, const Circle2<Scalar>& c,
                                const Tolerance<Scalar>& tol = {}) {
  const Vector2<Scalar> d = p - c.center();
  const Scalar d2 = d.squaredNorm();
  if (std::sqrt(d2) <= tol.eps_degenerate * std::max(Scalar(1), c.radius())) {
    throw GeometryError(ErrorKind::CenterInversion, "cannot invert the circle center");
  }
  return c.center() + c.radius() * c.radius() * d / d2;
}

// ---------------------------------------------------------------------------
// Predicates: each returns a verdict plus the signed, scale-normalized residual.

template <typename Scalar>
struct Check {
  bool holds;
  Scalar residual;
};

template <typename Scalar>
Check<Scalar> make_check(Scalar residual, const Tolerance<Scalar>& tol) {
  return {std::abs(residual) <= tol.eps_incidence, residual};
}

template <typename Scalar>
Check<Scalar> is_on(const Point2<Scalar>& p, const Line2<Scalar>& l, const Tolerance<Scalar>& tol = {}) {
  return make_check(l.signed_distance(p) / magnitude_scale(p), tol);
}

template <typename Scalar>
Check<Scalar> is_on(const Point2<Scalar>& p, const Circle2<Scalar>& c, const Tolerance<Scalar>& tol = {}) {
  return make_check(((p - c.center()).norm() - c.radius()) / std::max(Scalar(1), c.radius()), tol);
}

template <typename Scalar>
Check<Scalar> is_on(const Point2<Scalar>& p, const Carrier<Scalar>& carrier,
                    const Tolerance<Scalar>& tol = {}) {
  return std::visit([&](const auto& c) { return is_on(p, c, tol); }, carrier);
}

/// d² − r_a² − r_b², normalized by max(1, r_a² + r_b²).
template <typename Scalar>
Check<Scalar> circles_orthogonal(const Circle2<Scalar>& a, const Circle2<Scalar>& b,
                                 const Tolerance<Scalar>& tol = {}) {
  const Scalar ra2 = a.radius() * a.radius();
  const Scalar rb2 = b.radius() * b.radius();
  const Scalar d2 = (a.center() - b.center()).squaredNorm();
  return make_check((d2 - ra2 - rb2) / std::max(Scalar(1), ra2 + rb2), tol);
}

template <typename Scalar>
Check<Scalar> line_tangent_to_circle(const Line2<Scalar>& l, const Circle2<Scalar>& c,
                                     const Tolerance<Scalar>& tol = {}) {
  return make_check((std::abs(l.signed_distance(c.center())) - c.radius()) /
                        std::max(Scalar(1), c.radius()),
                    tol);
}

/// Twice the triangle area over the squared longest side.
template <typename Scalar>
Check<Scalar> collinear(const Point2<Scalar>& p, const Point2<Scalar>& q, const Point2<Scalar>& r,
                        const Tolerance<Scalar>& tol = {}) {
  const Scalar longest = std::max({(q - p).norm(), (r - p).norm(), (r - q).norm()});
  if (!(longest > Scalar(0))) return {true, Scalar(0)};
  return make_check(cross2<Scalar>(q - p, r - p) / (longest * longest), tol);
}

}  // namespace hypmid
