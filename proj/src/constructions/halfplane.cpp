#include <cmath>

#include "internal.hpp"

namespace hypmid {

namespace {

Construction start_h2(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  require_in_domain(Model::HalfPlane, x);
  require_in_domain(Model::HalfPlane, y);
  detail::require_distinct(x, y, tol);
  Construction c(Model::HalfPlane, tol);
  c.given("x", x);
  c.given("y", y);
  return c;
}

// S¹(o, r): the perpendicular bisector of [x, y] meets ∂H² at o.
void carrier_circle(Construction& c) {
  c.line("L_xy", "x", "y");
  c.midpoint("n", "x", "y");
  c.perpendicular("B_xy", "L_xy", "n");
  c.intersect("o", "B_xy", kRealAxis, c.unique());
  c.circle_center_through("S_o", "o", "x");
}

}  // namespace

MidpointResult h2_case1(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  Construction c = start_h2(x, y, tol);
  if (std::abs(x.x() - y.x()) > tol.eps_degenerate * magnitude_scale(x, y)) {
    throw MethodInapplicable(ErrorKind::NotVerticallyAligned, "case 1 needs x1 = y1");
  }
  c.line("L_xy", "x", "y");
  c.intersect("o", "L_xy", kRealAxis, c.unique());
  c.midpoint("m", "x", "y");
  c.circle_diameter("S_xy", "x", "y");
  // The tangent from o to S_xy touches it at a; |o − a|² = Im x · Im y.
  c.circle_diameter("S_om", "o", "m");
  c.intersect("a", "S_om", "S_xy", c.left_of("o", "m"));
  c.circle_center_through("S_oa", "o", "a");
  c.intersect("z", "L_xy", "S_oa", c.upper());
  return detail::finish_midpoint(c, x, y, MethodId::Case1, tol);
}

MidpointResult h2_method_I(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  return detail::as_method("I", [&] {
    Construction c = start_h2(x, y, tol);
    carrier_circle(c);
    c.intersect("w", "L_xy", kRealAxis, c.unique());
    c.circle_diameter("S_wo", "w", "o");
    c.intersect("z", "S_wo", "S_o", c.upper());
    return detail::finish_midpoint(c, x, y, MethodId::I, tol);
  });
}

MidpointResult h2_method_II(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  return detail::as_method("II", [&] {
    Construction c = start_h2(x, y, tol);
    carrier_circle(c);
    c.intersect("xs", "S_o", kRealAxis, c.closer_to("x", "y"));
    c.intersect("ys", "S_o", kRealAxis, c.closer_to("y", "x"));
    c.line("L_xxs", "x", "xs");
    c.line("L_yys", "y", "ys");
    c.intersect("v", "L_xxs", "L_yys", c.unique());
    c.perpendicular("L_v", kRealAxis, "v");
    c.intersect("z", "L_v", "S_o", c.upper());
    return detail::finish_midpoint(c, x, y, MethodId::II, tol);
  });
}

MidpointResult h2_method_III(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  return detail::as_method("III", [&] {
    Construction c = start_h2(x, y, tol);
    carrier_circle(c);
    // A circle through x orthogonal to S_o has its center on the tangent at x.
    c.line("L_ox", "o", "x");
    c.line("L_oy", "o", "y");
    c.perpendicular("T_x", "L_ox", "x");
    c.perpendicular("T_y", "L_oy", "y");
    c.intersect("a", "T_x", "T_y", c.unique());
    c.circle_center_through("S_a", "a", "x");
    c.perpendicular("L_a", kRealAxis, "a");
    c.intersect("z", "L_a", "S_o", c.upper());
    return detail::finish_midpoint(c, x, y, MethodId::III, tol);
  });
}

MidpointResult h2_method_IV(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  return detail::as_method("IV", [&] {
    Construction c = start_h2(x, y, tol);
    carrier_circle(c);
    c.reflect("xbar", "x", kRealAxis);
    c.reflect("ybar", "y", kRealAxis);
    c.line("L_xybar", "x", "ybar");
    c.line("L_xbary", "xbar", "y");
    c.intersect("z1", "L_xybar", "L_xbary", c.unique());
    c.perpendicular("L_z1", kRealAxis, "z1");
    c.intersect("z", "L_z1", "S_o", c.upper());
    return detail::finish_midpoint(c, x, y, MethodId::IV, tol);
  });
}

}  // namespace hypmid
