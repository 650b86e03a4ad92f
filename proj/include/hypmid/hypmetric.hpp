#pragma once

// Hyperbolic distance in the upper half-plane H² and the Poincaré disk B²,
// geodesic carriers with their ideal endpoints, closed-form midpoints and a
// bisection oracle that shares no code with the ruler-and-compass routines.

#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "hypmid/geom2d.hpp"
#include "hypmid/moebius.hpp"

namespace hypmid {

enum class Model { HalfPlane, Disk };

std::string_view to_string(Model model);
/// Accepts "h2" / "b2" (and the long names).
Model parse_model(std::string_view text);

/// Throws OutsideDomain unless p lies in the open model domain.
void require_in_domain(Model model, const Point2d& p);

/// cosh ρ = 1 + |x−y|²/(2 x₂ y₂), evaluated as 2·arsinh(|x−y| / (2√(x₂y₂))),
/// which stays accurate for nearby points.
template <typename Scalar>
Scalar rho_halfplane(const Point2<Scalar>& x, const Point2<Scalar>& y) {
  if (!(x.y() > Scalar(0)) || !(y.y() > Scalar(0))) {
    throw GeometryError(ErrorKind::OutsideDomain, "half-plane points need x2 > 0");
  }
  return Scalar(2) * std::asinh((x - y).norm() / (Scalar(2) * std::sqrt(x.y() * y.y())));
}

/// sinh(ρ/2) = |x−y| / (√(1−|x|²) √(1−|y|²)).
template <typename Scalar>
Scalar rho_disk(const Point2<Scalar>& x, const Point2<Scalar>& y) {
  const Scalar fx = Scalar(1) - x.squaredNorm();
  const Scalar fy = Scalar(1) - y.squaredNorm();
  if (!(fx > Scalar(0)) || !(fy > Scalar(0))) {
    throw GeometryError(ErrorKind::OutsideDomain, "disk points need |x| < 1");
  }
  return Scalar(2) * std::asinh((x - y).norm() / std::sqrt(fx * fy));
}

double rho(Model model, const Point2d& x, const Point2d& y);

/// True when 0, x, y lie on one line (so the disk geodesic is a diameter).
bool collinear_with_origin(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

/// Circle S¹(a, r_a) through x, y, x*, y*; orthogonal to the unit circle.
struct OrthoCircle {
  Point2d a;
  double r_a;

  Circle2d circle() const { return Circle2d(a, r_a); }
};

/// Center and radius in closed form. Throws CollinearWithOrigin when 0, x, y
/// are collinear (the circle degenerates to a diameter).
OrthoCircle ortho_circle(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

/// A hyperbolic geodesic with ideal endpoints labelled so that
/// x_*, x, y, y_* occur in this order along the carrier.
struct Geodesic {
  Model model;
  Carrier2d carrier;
  ExtendedPointd start;  // x_*
  ExtendedPointd end;    // y_*

  bool is_line() const { return std::holds_alternative<Line2d>(carrier); }
};

Geodesic geodesic_of(Model model, const Point2d& x, const Point2d& y, const Toleranced& tol = {});

/// ρ = log |x_*, x, y, y_*|.
double rho_via_cross_ratio(Model model, const Point2d& x, const Point2d& y,
                           const Toleranced& tol = {});

/// Midpoint of e^{iα}, e^{iβ} on the unit semicircle: z = e^{iδ},
/// cos δ = cos((β+α)/2) / cos((β−α)/2). Requires 0 < α < β < π.
Point2d midpoint_halfplane_unitcircle(double alpha, double beta);

/// The same closed form for any semicircular H² carrier, after translating
/// and scaling the carrier onto the unit circle.
Point2d midpoint_halfplane_angles(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

/// A = √(1 + r_a²) + r_a.
double arc_constant(const OrthoCircle& ortho);

/// The point of the arc closest to the origin, on the segment [0, a].
Point2d arc_foot(const OrthoCircle& ortho);

/// ρ(w, v) for w = arc_foot(ortho): log((1 + A tan(θ/2)) / (1 − A tan(θ/2)))
/// with θ = ∠0av. Throws NotOnArc unless v is on the arc inside B².
double rho_disk_arc(const Point2d& v, const OrthoCircle& ortho, const Toleranced& tol = {});

/// Disk midpoint from signed arc angles measured at a:
/// A·tan(δ/2) = (B − 1)/(B + 1), B = √(F(α) F(β)), F(θ) = (1 + A tan(θ/2))/(1 − A tan(θ/2)).
Point2d midpoint_disk_angles(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

/// Independent reference: bisection along the geodesic arc on
/// ρ(x, m) − ρ(m, y). Angle parameter on circles, arclength on lines.
struct OracleMidpoint {
  Point2d z;
  double residual;  // |ρ(x, z) − ρ(z, y)|
};
OracleMidpoint midpoint_oracle_detailed(Model model, const Point2d& x, const Point2d& y,
                                        const Toleranced& tol = {});
Point2d midpoint_oracle(Model model, const Point2d& x, const Point2d& y, const Toleranced& tol = {});

/// Pr(x) = (x₁, 0) for x on S¹ ∩ H².
Point2d projection_pr(const Point2d& x, const Toleranced& tol = {});

/// Scale-normalized distance from p to the geodesic carrier.
double carrier_residual(const Geodesic& g, const Point2d& p);

}  // namespace hypmid
