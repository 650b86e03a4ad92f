#include <cmath>
#include <string>

#include "internal.hpp"

namespace hypmid {

namespace {

Construction start_b2(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  require_in_domain(Model::Disk, x);
  require_in_domain(Model::Disk, y);
  detail::require_distinct(x, y, tol);
  Construction c(Model::Disk, tol);
  c.given("x", x);
  c.given("y", y);
  return c;
}

void require_general_position(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  if (collinear_with_origin(x, y, tol)) {
    throw MethodInapplicable(ErrorKind::CollinearWithOrigin, "0, x, y are collinear");
  }
}

// Every bisector-circle method is undefined at |x| = |y|. Method I places
// w = L(x,y) ∩ L(x^*,y^*), which runs off to infinity as |x| → |y|, so it is
// also refused in a band around equality.
void require_unequal_moduli(const Point2d& x, const Point2d& y, const char* method, double gap) {
  if (std::abs(x.norm() - y.norm()) <= gap) {
    throw MethodInapplicable(ErrorKind::EqualModuli,
                             std::string("method ") + method + " needs |x| != |y|");
  }
}

// S¹(a, r_a) through x, y, x^*, y^*.
void ortho_carrier(Construction& c) {
  c.invert("xinv", "x", kUnitCircle);
  c.invert("yinv", "y", kUnitCircle);
  c.circle_through("S_a", "x", "y", "xinv");
}

}  // namespace

MidpointResult b2_case1(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  Construction c = start_b2(x, y, tol);
  if (!collinear_with_origin(x, y, tol)) {
    throw MethodInapplicable(ErrorKind::NotOnDiameter, "case 1 needs 0, x, y collinear");
  }
  c.line("L_xy", "x", "y");
  c.perpendicular("L_x", "L_xy", "x");
  c.perpendicular("L_y", "L_xy", "y");
  c.intersect("m", "L_x", kUnitCircle, c.left_of("x", "y"));
  c.intersect("mbar", "L_x", kUnitCircle, c.right_of("x", "y"));
  c.intersect("n", "L_y", kUnitCircle, c.left_of("x", "y"));
  c.intersect("nbar", "L_y", kUnitCircle, c.right_of("x", "y"));
  c.line("L_mnbar", "m", "nbar");
  c.line("L_mbarn", "mbar", "n");
  c.intersect("z", "L_mnbar", "L_mbarn", c.unique());
  return detail::finish_midpoint(c, x, y, MethodId::Case1, tol);
}

BisectorCircle bisector_circle(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  require_in_domain(Model::Disk, x);
  require_in_domain(Model::Disk, y);
  if (collinear_with_origin(x, y, tol)) {
    throw GeometryError(ErrorKind::CollinearWithOrigin, "bisector circle needs 0, x, y noncollinear");
  }
  const double x2 = x.squaredNorm();
  const double y2 = y.squaredNorm();
  if (std::abs(x.norm() - y.norm()) <= tol.eps_degenerate) {
    throw GeometryError(ErrorKind::EqualModuli, "bisector circle needs |x| != |y|");
  }
  const Point2d w = (y * (1.0 - x2) - x * (1.0 - y2)) / (y2 - x2);
  const double r_w = (x - y).norm() * std::sqrt((1.0 - x2) * (1.0 - y2)) / std::abs(y2 - x2);
  return {w, r_w};
}

Point2d inversion_chord_point(const Point2d& x, const Point2d& y) {
  const double x2 = x.squaredNorm();
  const double y2 = y.squaredNorm();
  return (y * (1.0 - x2) + x * (1.0 - y2)) / (1.0 - x2 * y2);
}

MidpointResult b2_method_I(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  return detail::as_method("I", [&] {
    Construction c = start_b2(x, y, tol);
    require_general_position(x, y, tol);
    require_unequal_moduli(x, y, "I", kEqualModuliGuard);
    ortho_carrier(c);
    c.center("a", "S_a");
    c.line("L_xy", "x", "y");
    c.line("L_xinvyinv", "xinv", "yinv");
    c.intersect("w", "L_xy", "L_xinvyinv", c.unique());
    // Compass at w, opened to a tangent point of S_a, draws S¹(w, r_w).
    c.circle_diameter("S_wa", "w", "a");
    c.intersect("T", "S_wa", "S_a", c.out_disk());
    c.circle_center_through("S_w", "w", "T");
    c.intersect("z", "S_w", "S_a", c.in_disk());
    return detail::finish_midpoint(c, x, y, MethodId::I, tol);
  });
}

MidpointResult b2_methods_II_to_VI(const Point2d& x, const Point2d& y, MethodId which,
                                   const Toleranced& tol) {
  const char* name = nullptr;
  switch (which) {
    case MethodId::II: name = "II"; break;
    case MethodId::III: name = "III"; break;
    case MethodId::IV: name = "IV"; break;
    case MethodId::V: name = "V"; break;
    case MethodId::VI: name = "VI"; break;
    default: throw std::invalid_argument("b2_methods_II_to_VI takes II, III, IV, V or VI");
  }
  return detail::as_method(name, [&] {
    Construction c = start_b2(x, y, tol);
    require_general_position(x, y, tol);
    require_unequal_moduli(x, y, name, tol.eps_degenerate);
    ortho_carrier(c);
    if (which != MethodId::II) {
      c.intersect("xs", "S_a", kUnitCircle, c.closer_to("x", "y"));
      c.intersect("ys", "S_a", kUnitCircle, c.closer_to("y", "x"));
    }
    std::string g;
    auto pair_point = [&](const char* label, const char* p1, const char* q1, const char* p2,
                          const char* q2) {
      const std::string l1 = std::string("L_") + p1 + q1;
      const std::string l2 = std::string("L_") + p2 + q2;
      c.line(l1, p1, q1);
      c.line(l2, p2, q2);
      c.intersect(label, l1, l2, c.unique());
      g = label;
    };
    switch (which) {
      case MethodId::II: pair_point("u", "x", "yinv", "y", "xinv"); break;
      case MethodId::III: pair_point("v", "x", "xs", "y", "ys"); break;
      case MethodId::IV: pair_point("s", "x", "ys", "y", "xs"); break;
      case MethodId::V: pair_point("t", "xs", "yinv", "ys", "xinv"); break;
      default: pair_point("k", "xs", "xinv", "ys", "yinv"); break;
    }
    if (c.point(g).norm() <= tol.eps_degenerate) {
      throw MethodInapplicable(ErrorKind::DegenerateInput,
                               std::string("method ") + name + ": auxiliary point is the origin");
    }
    c.line("L_0" + g, kOrigin, g);
    c.intersect("z", "L_0" + g, "S_a", c.in_disk());
    return detail::finish_midpoint(c, x, y, which, tol);
  });
}

MidpointResult b2_equal_moduli(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  Construction c = start_b2(x, y, tol);
  require_general_position(x, y, tol);
  if (std::abs(x.norm() - y.norm()) > tol.eps_degenerate) {
    throw MethodInapplicable(ErrorKind::DegenerateInput, "equal-moduli construction needs |x| = |y|");
  }
  ortho_carrier(c);
  c.center("a", "S_a");
  c.line("L_0a", kOrigin, "a");
  c.intersect("z", "L_0a", "S_a", c.in_disk());
  return detail::finish_midpoint(c, x, y, MethodId::EqualModuli, tol);
}

}  // namespace hypmid
