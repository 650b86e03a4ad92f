#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypmid/hypmetric.hpp"
#include "hypmid/verify.hpp"

using namespace hypmid;

namespace {

constexpr double kPi = std::numbers::pi;

Point2d unit_at(double angle) { return {std::cos(angle), std::sin(angle)}; }

template <typename F>
ErrorKind kind_of_throw(F&& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return ErrorKind::DegenerateInput;
}

}  // namespace

TEST(RhoHalfPlane, Examples) {
  EXPECT_NEAR(rho_halfplane<double>({0, 1}, {0, 2}), std::log(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(rho_halfplane<double>({0.3, 1.7}, {0.3, 1.7}), 0.0);
  EXPECT_NEAR(rho_halfplane<double>({1, 1}, {-1, 1}), std::acosh(3.0), 1e-14);
  EXPECT_NEAR(rho_halfplane<double>({1, 1}, {-1, 1}), std::log(3.0 + 2.0 * std::sqrt(2.0)), 1e-14);
  EXPECT_EQ(kind_of_throw([] { rho_halfplane<double>({0, 0}, {0, 1}); }), ErrorKind::OutsideDomain);
}

TEST(RhoDisk, Examples) {
  EXPECT_NEAR(rho_disk<double>({0, 0}, {0.5, 0}), std::log(3.0), 1e-15);
  EXPECT_DOUBLE_EQ(rho_disk<double>({0.2, -0.4}, {0.2, -0.4}), 0.0);
  // |x − y| = √0.5 and both conformal factors are √0.75.
  EXPECT_NEAR(rho_disk<double>({0.5, 0}, {0, 0.5}), 2.0 * std::asinh(std::sqrt(0.5) / 0.75), 1e-15);
  EXPECT_NEAR(rho_disk<double>({0.5, 0}, {0, 0.5}), std::acosh(1.0 + 2.0 * 0.5 / 0.5625), 1e-14);
  EXPECT_NEAR(rho_disk<double>({0.5, 0}, {0, 0.5}), rho_via_cross_ratio(Model::Disk, {0.5, 0}, {0, 0.5}), 1e-13);
  EXPECT_EQ(kind_of_throw([] { rho_disk<double>({1, 0}, {0, 0}); }), ErrorKind::OutsideDomain);
}

TEST(OrthoCircle, StandardPair) {
  const OrthoCircle oc = ortho_circle({0.5, 0}, {0, 0.5});
  EXPECT_NEAR(oc.a.x(), 1.25, 1e-14);
  EXPECT_NEAR(oc.a.y(), 1.25, 1e-14);
  EXPECT_NEAR(oc.r_a, std::sqrt(2.125), 1e-14);
  EXPECT_NEAR(oc.a.squaredNorm() - oc.r_a * oc.r_a, 1.0, 1e-13);
  EXPECT_EQ(kind_of_throw([] { ortho_circle({0.3, 0}, {0.6, 0}); }), ErrorKind::CollinearWithOrigin);
}

TEST(GeodesicOf, Examples) {
  const Geodesic v = geodesic_of(Model::HalfPlane, {0, 1}, {0, 4});
  ASSERT_TRUE(v.is_line());
  EXPECT_NEAR(std::get<Line2d>(v.carrier).signed_distance({0, 17}), 0.0, 1e-15);
  ASSERT_TRUE(v.start.is_finite());
  EXPECT_NEAR(v.start.point().norm(), 0.0, 1e-15);
  EXPECT_TRUE(v.end.is_infinite());

  const Geodesic d = geodesic_of(Model::Disk, {0.3, 0}, {0.6, 0});
  ASSERT_TRUE(d.is_line());
  EXPECT_NEAR(d.start.point().x(), -1.0, 1e-15);
  EXPECT_NEAR(d.end.point().x(), 1.0, 1e-15);

  const Geodesic c = geodesic_of(Model::Disk, {0.5, 0}, {0, 0.5});
  ASSERT_FALSE(c.is_line());
  // x_*, x, y, y_* in order: x_* is the ideal endpoint next to x.
  EXPECT_LT((c.start.point() - Point2d(0.5, 0)).norm(), (c.start.point() - Point2d(0, 0.5)).norm());
  EXPECT_NEAR(c.start.point().norm(), 1.0, 1e-14);
}

TEST(CrossRatioDistance, Examples) {
  EXPECT_NEAR(rho_via_cross_ratio(Model::HalfPlane, {0, 1}, {0, 2}), std::log(2.0), 1e-14);
  EXPECT_NEAR(rho_via_cross_ratio(Model::Disk, {0, 0}, {0.5, 0}), std::log(3.0), 1e-14);
  EXPECT_THROW(rho_via_cross_ratio(Model::Disk, {0.1, 0.1}, {0.1, 0.1}), GeometryError);
}

TEST(UnitCircleMidpoint, Examples) {
  const Point2d sym = midpoint_halfplane_unitcircle(kPi / 3, 2 * kPi / 3);
  EXPECT_NEAR(sym.x(), 0.0, 1e-15);
  EXPECT_NEAR(sym.y(), 1.0, 1e-15);

  const Point2d z = midpoint_halfplane_unitcircle(kPi / 6, kPi / 2);
  const double delta = std::acos(1.0 / std::sqrt(3.0));
  EXPECT_NEAR(std::atan2(z.y(), z.x()), delta, 1e-15);
  EXPECT_NEAR(delta, 0.9553166, 1e-7);
  EXPECT_LE(std::abs(rho_halfplane(unit_at(kPi / 6), z) - rho_halfplane(z, unit_at(kPi / 2))), 1e-12);

  EXPECT_EQ(kind_of_throw([] { midpoint_halfplane_unitcircle(1.0, 1.0); }), ErrorKind::BadAngleOrder);
}

TEST(ArcDistance, Examples) {
  const OrthoCircle oc = ortho_circle({0.5, 0}, {0, 0.5});
  EXPECT_NEAR(arc_constant(oc), std::sqrt(3.125) + std::sqrt(2.125), 1e-14);
  EXPECT_NEAR(arc_constant(oc), 3.2255049, 1e-7);
  const Point2d w = arc_foot(oc);
  EXPECT_NEAR(rho_disk_arc(w, oc), 0.0, 1e-14);
  // The foot of the symmetric arc sits on the diagonal, so ρ(w, x) = ρ(w, y).
  EXPECT_NEAR(rho_disk_arc({0, 0.5}, oc), rho_disk(w, Point2d(0, 0.5)), 1e-12);
  EXPECT_NEAR(rho_disk_arc({0.5, 0}, oc), rho_disk(w, Point2d(0.5, 0)), 1e-12);
  EXPECT_EQ(kind_of_throw([&] { rho_disk_arc({0.1, 0.1}, oc); }), ErrorKind::NotOnArc);
}

TEST(DiskAngleMidpoint, Examples) {
  const Point2d z = midpoint_disk_angles({0.5, 0}, {0, 0.5});
  EXPECT_NEAR(z.x(), z.y(), 1e-13);
  const Point2d ref = midpoint_oracle(Model::Disk, {0.5, 0}, {0, 0.5});
  EXPECT_LE((z - ref).norm(), 1e-9);
  const Point2d sym = midpoint_disk_angles({0.5, 0.1}, {0.1, 0.5});
  EXPECT_NEAR(sym.x(), sym.y(), 1e-13);
  EXPECT_THROW(midpoint_disk_angles({0.2, 0}, {0.6, 0}), GeometryError);
}

TEST(Oracle, Examples) {
  const Point2d a = midpoint_oracle(Model::HalfPlane, {0, 1}, {0, 4});
  EXPECT_NEAR(a.x(), 0.0, 1e-12);
  EXPECT_NEAR(a.y(), 2.0, 1e-12);
  const Point2d b = midpoint_oracle(Model::Disk, {-0.5, 0}, {0.5, 0});
  EXPECT_NEAR(b.norm(), 0.0, 1e-12);
  const OracleMidpoint c = midpoint_oracle_detailed(Model::Disk, {0.5, 0}, {0, 0.5});
  EXPECT_LE(c.residual, 1e-12);
}

TEST(Projection, Examples) {
  const Point2d p = projection_pr(unit_at(kPi / 3));
  EXPECT_NEAR(p.x(), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(p.y(), 0.0);
  EXPECT_NEAR(projection_pr(unit_at(kPi / 2)).norm(), 0.0, 1e-15);
  EXPECT_NEAR(rho_halfplane(unit_at(kPi / 3), unit_at(2 * kPi / 3)), std::log(3.0), 1e-14);
  EXPECT_NEAR(rho_disk<double>({0.5, 0}, {-0.5, 0}), 2.0 * std::log(3.0), 1e-14);
  EXPECT_EQ(kind_of_throw([] { projection_pr({0.5, 0.5}); }), ErrorKind::NotOnUnitCircle);
}

// --- Properties -----------------------------------------------------------------

TEST(Properties, MetricAxioms) {
  Rng rng(31);
  SweepConfig cfg;
  for (int i = 0; i < 300; ++i) {
    const Point2d x = sample_disk_point(rng, 0.95);
    const Point2d y = sample_disk_point(rng, 0.95);
    const Point2d z = sample_disk_point(rng, 0.95);
    EXPECT_DOUBLE_EQ(rho_disk(x, y), rho_disk(y, x));
    EXPECT_LE(rho_disk(x, z), rho_disk(x, y) + rho_disk(y, z) + 1e-12);
    const auto [p, q] = sample_halfplane_pair(rng, cfg);
    EXPECT_GT(rho_halfplane(p, q), 0.0);
  }
}

// The Cayley map w = (z − i)/(z + i) carries H² isometrically onto B².
TEST(Properties, CayleyMapIsAnIsometry) {
  Rng rng(32);
  SweepConfig cfg;
  auto cayley = [](const Point2d& z) {
    const double den = z.x() * z.x() + (z.y() + 1) * (z.y() + 1);
    return Point2d((z.squaredNorm() - 1.0) / den, -2.0 * z.x() / den);
  };
  for (int i = 0; i < 500; ++i) {
    const auto [x, y] = sample_halfplane_pair(rng, cfg);
    const double a = rho_halfplane(x, y);
    const double b = rho_disk(cayley(x), cayley(y));
    EXPECT_LE(std::abs(a - b) / std::max(1.0, a), 1e-8) << x.transpose() << " " << y.transpose();
  }
}

TEST(Properties, MidpointsSplitTheDistance) {
  Rng rng(33);
  SweepConfig cfg;
  for (int i = 0; i < 300; ++i) {
    const auto [x, y] = sample_halfplane_pair(rng, cfg);
    const Point2d z = midpoint_halfplane_angles(x, y);
    EXPECT_LE(std::abs(rho_halfplane(x, z) - rho_halfplane(z, y)), 1e-9);
    EXPECT_LE(carrier_residual(geodesic_of(Model::HalfPlane, x, y), z), 1e-9);
    const auto [p, q] = sample_disk_pair(rng, cfg);
    const Point2d m = midpoint_disk_angles(p, q);
    EXPECT_LE(std::abs(rho_disk(p, m) - rho_disk(m, q)), 1e-9);
    EXPECT_LE((m - midpoint_oracle(Model::Disk, p, q)).norm(), 1e-9);
  }
}
