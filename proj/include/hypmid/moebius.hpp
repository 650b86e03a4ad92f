#pragma once

// Extended plane, chordal metric, absolute ratio and Möbius maps presented as
// words in reflections and inversions.

#include <cmath>
#include <optional>
#include <variant>
#include <vector>

#include "hypmid/geom2d.hpp"

namespace hypmid {

/// A point of the extended plane: finite, or ∞.
template <typename Scalar>
class ExtendedPoint {
 public:
  ExtendedPoint(const Point2<Scalar>& p) : point_(p) {}  // NOLINT: implicit lift is intended
  static ExtendedPoint infinity() { return ExtendedPoint(); }

  bool is_infinite() const { return !point_.has_value(); }
  bool is_finite() const { return point_.has_value(); }
  /// Precondition: is_finite().
  const Point2<Scalar>& point() const { return *point_; }

  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
    return a.point() == b.point();
  }

 private:
  ExtendedPoint() = default;
  std::optional<Point2<Scalar>> point_;
};

using ExtendedPointd = ExtendedPoint<double>;

/// q(x, y) = |x − y| / (√(1+|x|²) √(1+|y|²)), with q(x, ∞) = 1/√(1+|x|²).
template <typename Scalar>
Scalar chordal(const ExtendedPoint<Scalar>& p, const ExtendedPoint<Scalar>& q) {
  if (p.is_infinite() && q.is_infinite()) return Scalar(0);
  if (p.is_infinite()) return Scalar(1) / std::sqrt(Scalar(1) + q.point().squaredNorm());
  if (q.is_infinite()) return Scalar(1) / std::sqrt(Scalar(1) + p.point().squaredNorm());
  return (p.point() - q.point()).norm() /
         (std::sqrt(Scalar(1) + p.point().squaredNorm()) * std::sqrt(Scalar(1) + q.point().squaredNorm()));
}

/// |a,b,c,d| = q(a,c) q(b,d) / (q(a,b) q(c,d)). Finite quadruples use the
/// Euclidean quotient directly; the chordal normalization cancels.
template <typename Scalar>
Scalar absolute_ratio(const ExtendedPoint<Scalar>& a, const ExtendedPoint<Scalar>& b,
                      const ExtendedPoint<Scalar>& c, const ExtendedPoint<Scalar>& d,
                      const Tolerance<Scalar>& tol = {}) {
  const ExtendedPoint<Scalar>* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (chordal(*pts[i], *pts[j]) <= tol.eps_degenerate) {
        throw GeometryError(ErrorKind::RepeatedPoint, "absolute ratio needs four distinct points");
      }
    }
  }
  if (a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite()) {
    return ((a.point() - c.point()).norm() * (b.point() - d.point()).norm()) /
           ((a.point() - b.point()).norm() * (c.point() - d.point()).norm());
  }
  return (chordal(a, c) * chordal(b, d)) / (chordal(a, b) * chordal(c, d));
}

/// Reflection in the line {x : x·a = t}; fixes ∞.
template <typename Scalar>
struct Reflection {
  Vector2<Scalar> a;
  Scalar t;
};

/// Inversion in a circle; swaps its center with ∞.
template <typename Scalar>
struct Inversion {
  Circle2<Scalar> circle;
};

template <typename Scalar>
using Generator = std::variant<Reflection<Scalar>, Inversion<Scalar>>;

template <typename Scalar>
ExtendedPoint<Scalar> apply(const Generator<Scalar>& g, const ExtendedPoint<Scalar>& p) {
  if (const auto* r = std::get_if<Reflection<Scalar>>(&g)) {
    if (p.is_infinite()) return p;
    return reflect_in_line<Scalar>(p.point(), r->a, r->t);
  }
  const auto& c = std::get<Inversion<Scalar>>(g).circle;
  if (p.is_infinite()) return ExtendedPoint<Scalar>(c.center());
  const Vector2<Scalar> d = p.point() - c.center();
  const Scalar d2 = d.squaredNorm();
  if (d2 == Scalar(0)) return ExtendedPoint<Scalar>::infinity();
  return ExtendedPoint<Scalar>(Point2<Scalar>(c.center() + c.radius() * c.radius() * d / d2));
}

template <typename Scalar>
struct MoebiusMap2;

template <typename Scalar>
ExtendedPoint<Scalar> apply(const MoebiusMap2<Scalar>& map, ExtendedPoint<Scalar> p);

/// Generators applied first to last; the empty word is the identity.
template <typename Scalar>
struct MoebiusMap2 {
  std::vector<Generator<Scalar>> generators;

  ExtendedPoint<Scalar> operator()(const ExtendedPoint<Scalar>& p) const { return hypmid::apply(*this, p); }
};

template <typename Scalar>
ExtendedPoint<Scalar> apply(const MoebiusMap2<Scalar>& map, ExtendedPoint<Scalar> p) {
  for (const auto& g : map.generators) p = hypmid::apply(g, p);  // qualified: ADL would find std::apply
  return p;
}

using MoebiusMap2d = MoebiusMap2<double>;
using Generatord = Generator<double>;
using Reflectiond = Reflection<double>;
using Inversiond = Inversion<double>;

}  // namespace hypmid
