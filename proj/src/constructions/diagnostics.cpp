#include <algorithm>
#include <cmath>
#include <numbers>

#include "internal.hpp"

namespace hypmid {

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::ConditionNotMet: return "n/a";
  }
  return "?";
}

void DiagnosticsReport::add(std::string name, double residual, double threshold) {
  const double r = std::abs(residual);
  claims.push_back({std::move(name), r, r <= threshold ? ClaimStatus::Pass : ClaimStatus::Fail});
}

void DiagnosticsReport::skip(std::string name) {
  claims.push_back({std::move(name), 0.0, ClaimStatus::ConditionNotMet});
}

const Claim* DiagnosticsReport::find(std::string_view name) const {
  for (const auto& c : claims) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool DiagnosticsReport::all_pass() const {
  return std::none_of(claims.begin(), claims.end(),
                      [](const Claim& c) { return c.status == ClaimStatus::Fail; });
}

double DiagnosticsReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : claims) {
    if (c.status != ClaimStatus::ConditionNotMet) m = std::max(m, c.residual);
  }
  return m;
}

namespace {

double collinear_residual(const Point2d& p, const Point2d& q, const Point2d& r) {
  return collinear<double>(p, q, r).residual;
}

// Unit tangent-line helper: the line through p orthogonal to L(center, p).
Line2d tangent_at(const Point2d& center, const Point2d& p) {
  return perpendicular_through(line_through<double>(center, p), p);
}

Line2d vertical_through(const Point2d& p) { return perpendicular_through(real_axis<double>(), p); }

// Orthocenter of a triangle: intersection of two altitudes.
Point2d orthocenter(const Point2d& p, const Point2d& q, const Point2d& r) {
  const Line2d alt_p = perpendicular_through(line_through<double>(q, r), p);
  const Line2d alt_q = perpendicular_through(line_through<double>(p, r), q);
  return intersect_line_line(alt_p, alt_q);
}

double relative(double value, double scale) { return value / std::max(1.0, std::abs(scale)); }

}  // namespace

std::pair<Point2d, Point2d> normalize_to_unit_carrier(const Point2d& x, const Point2d& y,
                                                      const Toleranced& tol) {
  const Geodesic g = geodesic_of(Model::HalfPlane, x, y, tol);
  if (g.is_line()) {
    throw GeometryError(ErrorKind::DegenerateInput, "vertical carrier has no unit normalization");
  }
  const auto& c = std::get<Circle2d>(g.carrier);
  const Vector2d shift(c.center().x(), 0.0);
  return {(x - shift) / c.radius(), (y - shift) / c.radius()};
}

DiagnosticsReport lemma31_report(const Point2d& x_in, const Point2d& y_in, const Toleranced& tol) {
  for (const Point2d* p : {&x_in, &y_in}) {
    if (std::abs(p->norm() - 1.0) > tol.eps_incidence || !(p->y() > 0.0)) {
      throw GeometryError(ErrorKind::NotOnUnitCircle, "points must lie on S¹ ∩ H²");
    }
  }
  detail::require_distinct(x_in, y_in, tol);

  // x = e^{iα}, y = e^{iβ} with α < β, so x_* = 1 and y_* = −1.
  Point2d x = x_in;
  Point2d y = y_in;
  if (std::atan2(x.y(), x.x()) > std::atan2(y.y(), y.x())) std::swap(x, y);
  const double alpha = std::atan2(x.y(), x.x());
  const double beta = std::atan2(y.y(), y.x());
  const Point2d xs(1.0, 0.0);
  const Point2d ys(-1.0, 0.0);
  const double eps = tol.eps_incidence;

  DiagnosticsReport r;
  r.title = "half-plane unit carrier";
  const Point2d z = midpoint_oracle(Model::HalfPlane, x, y, tol);

  const Line2d l_xy = line_through(x, y, tol);
  const Point2d v = intersect_line_line(line_through(x, xs, tol), line_through(y, ys, tol));
  const Point2d a = intersect_line_line(tangent_at(Point2d::Zero(), x), tangent_at(Point2d::Zero(), y));
  const double r_a = (x - a).norm();
  const Point2d a_pole = Point2d(std::cos((beta + alpha) / 2.0), std::sin((beta + alpha) / 2.0)) /
                         std::cos((beta - alpha) / 2.0);

  r.add("Re v = Re z", v.x() - z.x(), eps);
  r.add("Re a = Re z", a.x() - z.x(), eps);
  r.add("a = e^{i(b+a)/2} / cos((b-a)/2)", relative((a - a_pole).norm(), a.norm()), eps);
  {
    const Point2d z1(z.x(), 0.0);
    const double angle_x = std::atan2(x.y(), std::abs(x.x() - z1.x()));
    const double angle_y = std::atan2(y.y(), std::abs(y.x() - z1.x()));
    r.add("angle y1 z1 y = angle x1 z1 x", angle_y - angle_x, eps);
  }
  r.add("v on S1(a, r_a)", relative((v - a).norm() - r_a, r_a), eps);
  {
    const Point2d p = orthocenter(v, xs, ys);
    r.add("orthocenter of (v, x_*, y_*) on S1(a, r_a)", relative((p - a).norm() - r_a, r_a), eps);
  }

  // Everything built on w needs L(x, y) to meet the real axis.
  const bool has_w = std::abs(x.y() - y.y()) > tol.eps_degenerate;
  const char* w_claims[] = {"w.z = 1 (L(w,z) tangent to S1)",
                            "S1 cap S1(w/2,|w|/2) is the midpoint",
                            "n = L(x,y) cap S1(w/2,|w|/2) is the Euclidean midpoint",
                            "a.w = 1",
                            "u on L(s,t)",
                            "u.(2a - w) = 1"};
  if (!has_w) {
    for (const char* name : w_claims) r.skip(name);
    return r;
  }
  const Point2d w = intersect_line_line(l_xy, real_axis<double>(), tol);
  const Circle2d half_w = circle_on_diameter<double>(Point2d::Zero(), w, tol);
  r.add(w_claims[0], relative(w.dot(z) - 1.0, w.norm()), eps);
  {
    const Point2d zp = intersect_circle_circle(Circle2d::unit(), half_w, Selectord::upper(), tol);
    r.add(w_claims[1], rho_halfplane(x, zp) - rho_halfplane(zp, y), eps);
  }
  {
    auto pts = line_circle_points(l_xy, half_w, tol);
    const Point2d n = *std::max_element(pts.begin(), pts.end(), [&](const Point2d& p, const Point2d& q) {
      return (p - w).norm() < (q - w).norm();
    });
    r.add(w_claims[2], (n - euclidean_midpoint(x, y)).norm(), eps);
  }
  r.add(w_claims[3], relative(a.dot(w) - 1.0, a.norm() * w.norm()), eps);
  {
    const auto st = circle_circle_points(Circle2d(a, r_a), half_w, tol);
    const Point2d u = intersect_line_line(vertical_through(a), l_xy, tol);
    if (st.size() == 2) {
      r.add(w_claims[4], collinear_residual(u, st[0], st[1]), eps);
    } else {
      r.skip(w_claims[4]);
    }
    r.add(w_claims[5], relative(u.dot(2.0 * a - w) - 1.0, u.norm() * (2.0 * a - w).norm()), eps);
  }
  return r;
}

DiagnosticsReport lemma46_report(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  const BisectorCircle bc = bisector_circle(x, y, tol);
  const OrthoCircle oc = ortho_circle(x, y, tol);
  const Geodesic g = geodesic_of(Model::Disk, x, y, tol);
  const Point2d xs = g.start.point();
  const Point2d ys = g.end.point();
  const Point2d xinv = invert_unit(x, tol);
  const Point2d yinv = invert_unit(y, tol);
  const Point2d& w = bc.w;
  const double eps = tol.eps_incidence;
  auto L = [&](const Point2d& p, const Point2d& q) { return line_through(p, q, tol); };

  DiagnosticsReport r;
  r.title = "disk bisector circle";
  {
    const Point2d w_lines = intersect_line_line(L(x, y), L(xinv, yinv), tol);
    r.add("w (closed form) = L(x,y) cap L(x^*,y^*)", relative((w - w_lines).norm(), w.norm()), eps);
  }
  const Point2d z = intersect_circle_circle(bc.circle(), oc.circle(), Selectord::inside_unit_disk(), tol);
  r.add("S1(w,r_w) cap S1(a,r_a) cap B2 is the midpoint", rho_disk(x, z) - rho_disk(z, y), eps);
  r.add("w.a = 1", relative(w.dot(oc.a) - 1.0, w.norm() * oc.a.norm()), eps);
  r.add("r_w^2 + 1 = |w|^2", relative(bc.r_w * bc.r_w + 1.0 - w.squaredNorm(), w.squaredNorm()), eps);
  r.add("S1(w,r_w) orthogonal to S1(a,r_a)", circles_orthogonal(bc.circle(), oc.circle(), tol).residual, eps);
  r.add("S1(w,r_w) orthogonal to S1", circles_orthogonal(bc.circle(), Circle2d::unit(), tol).residual, eps);

  const Point2d u = inversion_chord_point(x, y);
  {
    const Point2d u_lines = intersect_line_line(L(x, yinv), L(y, xinv), tol);
    r.add("u (closed form) = L(x,y^*) cap L(y,x^*)", relative((u - u_lines).norm(), u.norm()), eps);
  }
  const Point2d origin = Point2d::Zero();
  struct Aux {
    const char* name;
    Point2d p1, q1, p2, q2;
  };
  const Aux aux[] = {
      {"0, z, u collinear", x, yinv, y, xinv},
      {"0, z, v collinear", x, xs, y, ys},
      {"0, z, s collinear", x, ys, y, xs},
      {"0, z, t collinear", xs, yinv, ys, xinv},
      {"0, z, k collinear", xs, xinv, ys, yinv},
  };
  for (const auto& e : aux) {
    try {
      const Point2d p = intersect_line_line(L(e.p1, e.q1), L(e.p2, e.q2), tol);
      r.add(e.name, collinear_residual(origin, z, p), eps);
    } catch (const GeometryError& err) {
      if (err.kind() != ErrorKind::ParallelLines) throw;
      r.skip(e.name);
    }
  }
  r.add("u on L(x_*,y_*)", collinear_residual(u, xs, ys), eps);

  const double rw2 = bc.r_w * bc.r_w;
  struct Pair {
    const char* product;
    const char* line;
    Point2d p, q;
  };
  const Pair pairs[] = {
      {"|x-w||y-w| = r_w^2", "w, x, y collinear", x, y},
      {"|x_*-w||y_*-w| = r_w^2", "w, x_*, y_* collinear", xs, ys},
      {"|x^*-w||y^*-w| = r_w^2", "w, x^*, y^* collinear", xinv, yinv},
  };
  for (const auto& pr : pairs) {
    r.add(pr.product, ((pr.p - w).norm() * (pr.q - w).norm() - rw2) / rw2, eps);
    r.add(pr.line, collinear_residual(w, pr.p, pr.q), eps);
  }
  return r;
}

bool inversion_arc_is_semicircle(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  const OrthoCircle oc = ortho_circle(x, y, tol);
  const double chord = (invert_unit(x, tol) - invert_unit(y, tol)).norm();
  return std::abs(chord / (2.0 * oc.r_a) - 1.0) <= tol.eps_incidence;
}

DiagnosticsReport prop47_report(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  // Same admissibility as the bisector circle.
  (void)bisector_circle(x, y, tol);
  const OrthoCircle oc = ortho_circle(x, y, tol);
  const Geodesic g = geodesic_of(Model::Disk, x, y, tol);
  const Point2d xs = g.start.point();
  const Point2d ys = g.end.point();
  const Point2d xinv = invert_unit(x, tol);
  const Point2d yinv = invert_unit(y, tol);
  const Point2d origin = Point2d::Zero();
  const double eps = tol.eps_incidence;
  auto meet = [&](const Point2d& p1, const Point2d& q1, const Point2d& p2, const Point2d& q2) {
    return intersect_line_line(line_through(p1, q1, tol), line_through(p2, q2, tol), tol);
  };

  DiagnosticsReport r;
  r.title = "disk circle through 0, x, y";
  const Point2d b = meet(xs, y, x, yinv);
  const Point2d d = meet(xinv, y, xs, yinv);
  const Point2d b2 = meet(x, ys, xinv, y);
  const Point2d d2 = meet(x, yinv, xinv, ys);
  r.add("0, b, d collinear", collinear_residual(origin, b, d), eps);
  r.add("0, b', d' collinear", collinear_residual(origin, b2, d2), eps);

  const char* semicircle_claims[] = {"z = L(0,c) cap S1(a,r_a) cap B2 is the midpoint",
                                     "S1(c,r_c) orthogonal to S1(a,r_a)",
                                     "|z,x,x^*,z'| = |z,y,y^*,z'|"};
  if (!inversion_arc_is_semicircle(x, y, tol)) {
    for (const char* name : semicircle_claims) r.skip(name);
    return r;
  }
  const Circle2d s_c = circle_through<double>(origin, x, y, tol);
  const Line2d l_0c = line_through<double>(origin, s_c.center(), tol);
  const Point2d z = intersect_line_circle(l_0c, oc.circle(), Selectord::inside_unit_disk(), tol);
  const Point2d zp = intersect_line_circle(l_0c, oc.circle(), Selectord::outside_unit_disk(), tol);
  r.add(semicircle_claims[0], rho_disk(x, z) - rho_disk(z, y), eps);
  r.add(semicircle_claims[1], circles_orthogonal(s_c, oc.circle(), tol).residual, eps);
  const double lhs = absolute_ratio<double>(z, x, xinv, zp, tol);
  const double rhs = absolute_ratio<double>(z, y, yinv, zp, tol);
  r.add(semicircle_claims[2], (lhs - rhs) / std::max(1.0, std::abs(lhs)), eps);
  return r;
}

OrthogonalityCriterion prop48_orthogonality(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  require_in_domain(Model::Disk, x);
  require_in_domain(Model::Disk, y);
  if (x.norm() <= tol.eps_degenerate || y.norm() <= tol.eps_degenerate ||
      collinear_with_origin(x, y, tol)) {
    throw GeometryError(ErrorKind::CollinearWithOrigin, "0, x, y must be noncollinear");
  }
  const double nx = x.norm();
  const double ny = y.norm();
  const Circle2d cx(invert_unit(x, tol), std::sqrt(1.0 / (nx * nx) - 1.0));
  const Circle2d cy(invert_unit(y, tol), std::sqrt(1.0 / (ny * ny) - 1.0));
  const Check<double> orth = circles_orthogonal(cx, cy, tol);
  const double d2 = (cx.center() - cy.center()).squaredNorm();
  OrthogonalityCriterion out;
  out.orthogonal = orth.holds;
  out.orthogonality_residual = (d2 - cx.radius() * cx.radius() - cy.radius() * cy.radius()) * nx * ny / 2.0;
  out.criterion_residual = x.dot(y) / (nx * ny) - nx * ny;
  out.criterion_holds = std::abs(out.criterion_residual) <= tol.eps_incidence;
  return out;
}

}  // namespace hypmid
