#include "hypmid/hypmetric.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <functional>
#include <cmath>
#include <numbers>

namespace hypmid {

std::string_view to_string(Model model) {
  return model == Model::HalfPlane ? "h2" : "b2";
}

Model parse_model(std::string_view text) {
  if (text == "h2" || text == "H2" || text == "halfplane") return Model::HalfPlane;
  if (text == "b2" || text == "B2" || text == "disk") return Model::Disk;
  throw std::invalid_argument("unknown model '" + std::string(text) + "' (expected h2 or b2)");
}

void require_in_domain(Model model, const Point2d& p) {
  if (!p.allFinite()) throw GeometryError(ErrorKind::OutsideDomain, "non-finite point");
  if (model == Model::HalfPlane && !(p.y() > 0.0)) {
    throw GeometryError(ErrorKind::OutsideDomain, "half-plane points need x2 > 0");
  }
  if (model == Model::Disk && !(p.squaredNorm() < 1.0)) {
    throw GeometryError(ErrorKind::OutsideDomain, "disk points need |x| < 1");
  }
}

double rho(Model model, const Point2d& x, const Point2d& y) {
  return model == Model::HalfPlane ? rho_halfplane(x, y) : rho_disk(x, y);
}

bool collinear_with_origin(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  const double m = std::max(x.norm(), y.norm());
  return std::abs(cross2<double>(x, y)) <= tol.eps_degenerate * m * m;
}

namespace {

// Signed angle ∠0ap measured at a from the direction of the origin.
double angle_at_center(const Point2d& a, const Point2d& p) {
  const Vector2d u = -a;
  const Vector2d w = p - a;
  return std::atan2(cross2<double>(u, w), u.dot(w));
}

Eigen::Rotation2Dd rotation_to_positive_axis(const Point2d& a) {
  return Eigen::Rotation2Dd(-std::atan2(a.y(), a.x()));
}

}  // namespace

OrthoCircle ortho_circle(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  if (collinear_with_origin(x, y, tol)) {
    throw GeometryError(ErrorKind::CollinearWithOrigin, "0, x, y are collinear");
  }
  const double x2n = x.squaredNorm();
  const double y2n = y.squaredNorm();
  const Vector2d num = y * (1.0 + x2n) - x * (1.0 + y2n);
  const double den = 2.0 * (x.y() * y.x() - x.x() * y.y());
  // Multiplication by i: (u, v) -> (-v, u).
  const Point2d a(-num.y() / den, num.x() / den);
  const double r_a = (x - y).norm() * (x * y2n - y).norm() /
                     (2.0 * y.norm() * std::abs(x.x() * y.y() - x.y() * y.x()));
  return {a, r_a};
}

Geodesic geodesic_of(Model model, const Point2d& x, const Point2d& y, const Toleranced& tol) {
  require_in_domain(model, x);
  require_in_domain(model, y);
  if ((x - y).norm() <= tol.eps_degenerate * magnitude_scale(x, y)) {
    throw GeometryError(ErrorKind::DegenerateInput, "geodesic needs two distinct points");
  }

  if (model == Model::HalfPlane) {
    if (std::abs(x.x() - y.x()) <= tol.eps_degenerate * magnitude_scale(x, y)) {
      const double foot = (x.x() + y.x()) / 2.0;
      const Line2d vertical(Vector2d(1.0, 0.0), foot);
      const ExtendedPointd base(Point2d(foot, 0.0));
      if (x.y() < y.y()) return {model, vertical, base, ExtendedPointd::infinity()};
      return {model, vertical, ExtendedPointd::infinity(), base};
    }
    const double o = (y.squaredNorm() - x.squaredNorm()) / (2.0 * (y.x() - x.x()));
    const Point2d center(o, 0.0);
    const double r = (x - center).norm();
    const Point2d left(o - r, 0.0);
    const Point2d right(o + r, 0.0);
    if (x.x() < y.x()) return {model, Circle2d(center, r), left, right};
    return {model, Circle2d(center, r), right, left};
  }

  if (collinear_with_origin(x, y, tol)) {
    const Vector2d u = (x.norm() >= y.norm() ? x : y).normalized();
    const Line2d diameter(perp(u), 0.0);
    if (x.dot(u) < y.dot(u)) return {model, diameter, Point2d(-u), Point2d(u)};
    return {model, diameter, Point2d(u), Point2d(-u)};
  }

  const OrthoCircle oc = ortho_circle(x, y, tol);
  auto ends = circle_circle_points(oc.circle(), Circle2d::unit(), tol);
  if (ends.size() != 2) {
    throw GeometryError(ErrorKind::DegenerateInput, "orthogonal circle does not cut the boundary twice");
  }
  if (angle_at_center(oc.a, ends[0]) > angle_at_center(oc.a, ends[1])) std::swap(ends[0], ends[1]);
  if (angle_at_center(oc.a, x) < angle_at_center(oc.a, y)) return {model, oc.circle(), ends[0], ends[1]};
  return {model, oc.circle(), ends[1], ends[0]};
}

double rho_via_cross_ratio(Model model, const Point2d& x, const Point2d& y, const Toleranced& tol) {
  const Geodesic g = geodesic_of(model, x, y, tol);
  return std::log(absolute_ratio<double>(g.start, x, y, g.end, tol));
}

Point2d midpoint_halfplane_unitcircle(double alpha, double beta) {
  if (!(0.0 < alpha && alpha < beta && beta < std::numbers::pi)) {
    throw GeometryError(ErrorKind::BadAngleOrder, "need 0 < alpha < beta < pi");
  }
  const double delta = std::acos(std::cos((beta + alpha) / 2.0) / std::cos((beta - alpha) / 2.0));
  return {std::cos(delta), std::sin(delta)};
}

Point2d midpoint_halfplane_angles(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  const Geodesic g = geodesic_of(Model::HalfPlane, x, y, tol);
  if (g.is_line()) {
    throw GeometryError(ErrorKind::DegenerateInput, "angle formula needs a semicircular carrier");
  }
  const auto& c = std::get<Circle2d>(g.carrier);
  const Point2d xn = (x - c.center()) / c.radius();
  const Point2d yn = (y - c.center()) / c.radius();
  double alpha = std::atan2(xn.y(), xn.x());
  double beta = std::atan2(yn.y(), yn.x());
  if (alpha > beta) std::swap(alpha, beta);
  return c.center() + c.radius() * midpoint_halfplane_unitcircle(alpha, beta);
}

double arc_constant(const OrthoCircle& ortho) {
  return std::sqrt(1.0 + ortho.r_a * ortho.r_a) + ortho.r_a;
}

Point2d arc_foot(const OrthoCircle& ortho) {
  return ortho.a * (1.0 - ortho.r_a / ortho.a.norm());
}

double rho_disk_arc(const Point2d& v, const OrthoCircle& ortho, const Toleranced& tol) {
  if (!(v.squaredNorm() < 1.0) ||
      std::abs((v - ortho.a).norm() - ortho.r_a) > tol.eps_incidence * std::max(1.0, ortho.r_a)) {
    throw GeometryError(ErrorKind::NotOnArc, "point is not on the arc inside the disk");
  }
  const double theta = std::abs(angle_at_center(ortho.a, v));
  return 2.0 * std::atanh(arc_constant(ortho) * std::tan(theta / 2.0));
}

Point2d midpoint_disk_angles(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  require_in_domain(Model::Disk, x);
  require_in_domain(Model::Disk, y);
  if (x.norm() <= tol.eps_degenerate || y.norm() <= tol.eps_degenerate ||
      collinear_with_origin(x, y, tol)) {
    throw GeometryError(ErrorKind::DegenerateInput, "0, x, y must be noncollinear");
  }
  const OrthoCircle oc = ortho_circle(x, y, tol);
  const Eigen::Rotation2Dd rot = rotation_to_positive_axis(oc.a);
  const Point2d a(oc.a.norm(), 0.0);

  // α = sgn(Im x)·∠0ax in the frame where a is on the positive real axis.
  auto signed_angle = [&](const Point2d& p) {
    const Point2d q = rot * p;
    const Vector2d u = -a;
    const Vector2d w = q - a;
    const double unsigned_angle = std::atan2(std::abs(cross2<double>(u, w)), u.dot(w));
    return std::copysign(unsigned_angle, q.y());
  };
  const double A = arc_constant(oc);
  // log F(θ) = 2 artanh(A tan(θ/2)); B = exp((log F(α) + log F(β)) / 2), so
  // (B − 1)/(B + 1) = tanh((log F(α) + log F(β)) / 4).
  const double f_alpha = 2.0 * std::atanh(A * std::tan(signed_angle(x) / 2.0));
  const double f_beta = 2.0 * std::atanh(A * std::tan(signed_angle(y) / 2.0));
  const double delta = 2.0 * std::atan(std::tanh((f_alpha + f_beta) / 4.0) / A);
  const Point2d z_rotated = a + oc.r_a * Point2d(-std::cos(delta), std::sin(delta));
  return rot.inverse() * z_rotated;
}

OracleMidpoint midpoint_oracle_detailed(Model model, const Point2d& x, const Point2d& y,
                                        const Toleranced& tol) {
  const Geodesic g = geodesic_of(model, x, y, tol);

  // The carrier is rebuilt from three points so the oracle does not reuse the
  // closed-form center of the geodesic.
  std::function<Point2d(double)> at;
  if (g.is_line()) {
    at = [&](double s) { return Point2d(x + s * (y - x)); };
  } else {
    const Point2d mirror = model == Model::HalfPlane ? reflect_real<double>(y) : invert_unit<double>(x);
    const Circle2d c = circle_through<double>(x, y, mirror);
    const double tx = std::atan2(x.y() - c.center().y(), x.x() - c.center().x());
    double dt = std::atan2(y.y() - c.center().y(), y.x() - c.center().x()) - tx;
    if (dt > std::numbers::pi) dt -= 2.0 * std::numbers::pi;
    if (dt < -std::numbers::pi) dt += 2.0 * std::numbers::pi;
    at = [c, tx, dt](double s) {
      const double t = tx + s * dt;
      return Point2d(c.center() + c.radius() * Vector2d(std::cos(t), std::sin(t)));
    };
  }

  auto gap = [&](double s) {
    const Point2d m = at(s);
    return rho(model, x, m) - rho(model, m, y);
  };
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = gap(mid);
    if (g_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    (g_mid < 0.0 ? lo : hi) = mid;
  }
  const double s = std::abs(gap(lo)) <= std::abs(gap(hi)) ? lo : hi;
  return {at(s), std::abs(gap(s))};
}

Point2d midpoint_oracle(Model model, const Point2d& x, const Point2d& y, const Toleranced& tol) {
  return midpoint_oracle_detailed(model, x, y, tol).z;
}

Point2d projection_pr(const Point2d& x, const Toleranced& tol) {
  if (std::abs(x.norm() - 1.0) > tol.eps_incidence || !(x.y() > 0.0)) {
    throw GeometryError(ErrorKind::NotOnUnitCircle, "projection needs a point of S¹ ∩ H²");
  }
  return {x.x(), 0.0};
}

double carrier_residual(const Geodesic& g, const Point2d& p) {
  return is_on<double>(p, g.carrier).residual;
}

}  // namespace hypmid
