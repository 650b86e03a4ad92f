#include <cmath>
#include <utility>

#include "internal.hpp"

namespace hypmid {

namespace detail {

void require_distinct(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  if ((x - y).norm() <= tol.eps_degenerate * magnitude_scale(x, y)) {
    throw GeometryError(ErrorKind::DegenerateInput, "midpoint needs two distinct points");
  }
}

MidpointResult finish_midpoint(const Construction& c, const Point2d& x, const Point2d& y,
                               MethodId method, const Toleranced& tol) {
  MidpointResult r;
  r.trace = c.finish("z", method);
  r.z = r.trace.result;
  const Model model = c.model();
  r.residual_equal_distance = std::abs(rho(model, x, r.z) - rho(model, r.z, y));
  r.residual_on_geodesic = carrier_residual(geodesic_of(model, x, y, tol), r.z);
  r.oracle_distance = (r.z - midpoint_oracle(model, x, y, tol)).norm();
  r.flagged = !(r.oracle_distance <= kOracleFlag);
  return r;
}

}  // namespace detail

namespace {

bool vertical_pair(const Point2d& x, const Point2d& y, const Toleranced& tol) {
  return std::abs(x.x() - y.x()) <= tol.eps_degenerate * magnitude_scale(x, y);
}

// Along a diameter ρ(0, p) = 2 artanh|p|, so the midpoint of signed
// positions p, q is tanh of the mean of their artanh values.
Point2d diameter_midpoint(const Point2d& x, const Point2d& y) {
  const Vector2d u = (x.norm() >= y.norm() ? x : y).normalized();
  const double p = x.dot(u);
  const double q = y.dot(u);
  return std::tanh((std::atanh(p) + std::atanh(q)) / 2.0) * u;
}

MidpointResult closed_form(Model model, const Point2d& x, const Point2d& y, const Toleranced& tol) {
  require_in_domain(model, x);
  require_in_domain(model, y);
  detail::require_distinct(x, y, tol);
  Point2d z;
  if (model == Model::HalfPlane) {
    z = vertical_pair(x, y, tol) ? Point2d(x.x(), std::sqrt(x.y() * y.y()))
                                 : midpoint_halfplane_angles(x, y, tol);
  } else {
    z = collinear_with_origin(x, y, tol) ? diameter_midpoint(x, y) : midpoint_disk_angles(x, y, tol);
  }
  Construction c(model, tol);
  c.given("x", x);
  c.given("y", y);
  c.closed_form("z", z, {"x", "y"});
  return detail::finish_midpoint(c, x, y, MethodId::Angles, tol);
}

}  // namespace

MethodId auto_method(Model model, const Point2d& x, const Point2d& y, const Toleranced& tol) {
  if (model == Model::HalfPlane) return vertical_pair(x, y, tol) ? MethodId::Case1 : MethodId::III;
  if (collinear_with_origin(x, y, tol)) return MethodId::Case1;
  const double gap = std::abs(x.norm() - y.norm());
  if (gap <= tol.eps_degenerate) return MethodId::EqualModuli;
  if (gap <= kEqualModuliGuard) return MethodId::II;
  return MethodId::I;
}

MidpointResult midpoint(Model model, const Point2d& x, const Point2d& y, MethodId method,
                        const Toleranced& tol) {
  if (!tol.valid()) throw std::invalid_argument("tolerance needs 0 < eps_degenerate <= eps_incidence");
  require_in_domain(model, x);
  require_in_domain(model, y);
  detail::require_distinct(x, y, tol);
  if (method == MethodId::Auto) method = auto_method(model, x, y, tol);
  if (method == MethodId::Angles) return closed_form(model, x, y, tol);

  if (model == Model::HalfPlane) {
    switch (method) {
      case MethodId::Case1: return h2_case1(x, y, tol);
      case MethodId::I: return h2_method_I(x, y, tol);
      case MethodId::II: return h2_method_II(x, y, tol);
      case MethodId::III: return h2_method_III(x, y, tol);
      case MethodId::IV: return h2_method_IV(x, y, tol);
      default:
        throw MethodInapplicable(ErrorKind::DegenerateInput,
                                 std::string("method ") + std::string(to_string(method)) +
                                     " is not defined in the half-plane");
    }
  }
  switch (method) {
    case MethodId::Case1: return b2_case1(x, y, tol);
    case MethodId::EqualModuli: return b2_equal_moduli(x, y, tol);
    case MethodId::I: return b2_method_I(x, y, tol);
    default: return b2_methods_II_to_VI(x, y, method, tol);
  }
}

}  // namespace hypmid
