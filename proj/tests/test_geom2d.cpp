#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypmid/geom2d.hpp"
#include "hypmid/verify.hpp"

using namespace hypmid;

namespace {

void expect_point(const Point2d& got, const Point2d& want, double eps = 1e-12) {
  EXPECT_NEAR(got.x(), want.x(), eps);
  EXPECT_NEAR(got.y(), want.y(), eps);
}

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

TEST(LineThrough, AxisAndSlopedLine) {
  const Line2d axis = line_through<double>({0, 0}, {1, 0});
  EXPECT_NEAR(std::abs(axis.normal().y()), 1.0, 1e-15);
  EXPECT_NEAR(axis.offset(), 0.0, 1e-15);

  const Line2d l = line_through<double>({1, 1}, {2, 3});
  // normal ∝ (−2, 1), c = −1 after scaling by |(−2,1)|.
  const double s = l.normal().x() / -2.0;
  EXPECT_NEAR(l.normal().y(), s, 1e-15);
  EXPECT_NEAR(l.offset(), -s, 1e-15);
  EXPECT_NEAR(l.signed_distance({1, 1}), 0.0, 1e-15);
  EXPECT_NEAR(l.signed_distance({2, 3}), 0.0, 1e-15);
}

TEST(LineThrough, CoincidentPointsAreDegenerate) {
  EXPECT_EQ(kind_of_throw([] { line_through<double>({0, 0}, {0, 0}); }), ErrorKind::DegenerateInput);
}

TEST(Perpendicular, ThroughPoint) {
  const Line2d v = perpendicular_through(real_axis<double>(), Point2d(3, 5));
  EXPECT_NEAR(v.signed_distance({3, -7}), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v.normal().x()), 1.0, 1e-15);

  const Line2d x1 = line_through<double>({0, 0}, {0, 1});
  const Line2d back = perpendicular_through(x1, Point2d(0, 0));
  EXPECT_NEAR(back.signed_distance({5, 0}), 0.0, 1e-15);

  const Line2d diag = line_through<double>({0, 0}, {1, 1});
  const Line2d p = perpendicular_through(diag, Point2d(1, 0));
  EXPECT_NEAR(p.signed_distance({1, 0}), 0.0, 1e-15);
  EXPECT_NEAR(p.direction().dot(diag.direction()), 0.0, 1e-15);
}

TEST(IntersectLineLine, Examples) {
  const Line2d x1_zero(Vector2d(1, 0), 0.0);
  expect_point(intersect_line_line(x1_zero, real_axis<double>()), {0, 0});
  EXPECT_EQ(kind_of_throw([] { intersect_line_line(real_axis<double>(), Line2d(Vector2d(0, 1), 1.0)); }),
            ErrorKind::ParallelLines);
  expect_point(intersect_line_line(line_through<double>({0, 0}, {1, 1}), line_through<double>({1, 0}, {0, 1})),
               {0.5, 0.5});
}

TEST(IntersectLineCircle, Examples) {
  const Line2d x1_zero(Vector2d(1, 0), 0.0);
  expect_point(intersect_line_circle(x1_zero, Circle2d::unit(), Selectord::upper()), {0, 1});
  EXPECT_EQ(kind_of_throw([] {
              intersect_line_circle(Line2d(Vector2d(0, 1), 2.0), Circle2d::unit(), Selectord::upper());
            }),
            ErrorKind::NoIntersection);
  expect_point(intersect_line_circle(Line2d(Vector2d(0, 1), 0.5), Circle2d::unit(), Selectord::nearest_to({1, 0})),
               {std::sqrt(0.75), 0.5});
}

TEST(IntersectLineCircle, SelectorMatchingTwoPointsIsAmbiguous) {
  EXPECT_EQ(kind_of_throw([] {
              intersect_line_circle(real_axis<double>(), Circle2d::unit(), Selectord::inside_unit_disk());
            }),
            ErrorKind::AmbiguousSelection);
  EXPECT_EQ(kind_of_throw([] {
              intersect_line_circle(real_axis<double>(), Circle2d::unit(), Selectord::unique());
            }),
            ErrorKind::AmbiguousSelection);
}

TEST(IntersectLineCircle, TangentGivesOneCandidate) {
  const auto pts = line_circle_points(Line2d(Vector2d(1, 0), 1.0), Circle2d::unit());
  ASSERT_EQ(pts.size(), 1u);
  expect_point(pts[0], {1, 0});
}

TEST(IntersectCircleCircle, Examples) {
  expect_point(intersect_circle_circle(Circle2d::unit(), Circle2d({1, 0}, 1), Selectord::upper()),
               {0.5, std::sqrt(0.75)});
  EXPECT_EQ(kind_of_throw([] {
              intersect_circle_circle(Circle2d::unit(), Circle2d({3, 0}, 1), Selectord::upper());
            }),
            ErrorKind::NoIntersection);
  EXPECT_EQ(kind_of_throw([] {
              intersect_circle_circle(Circle2d::unit(), Circle2d::unit(), Selectord::upper());
            }),
            ErrorKind::ConcentricCircles);
}

TEST(CircleThrough, Examples) {
  const Circle2d u = circle_through<double>({1, 0}, {0, 1}, {-1, 0});
  expect_point(u.center(), {0, 0});
  EXPECT_NEAR(u.radius(), 1.0, 1e-12);
  EXPECT_EQ(kind_of_throw([] { circle_through<double>({0, 0}, {1, 1}, {2, 2}); }), ErrorKind::CollinearPoints);
  const Circle2d c = circle_through<double>({0, 0}, {1, 0}, {0, 1});
  expect_point(c.center(), {0.5, 0.5});
  EXPECT_NEAR(c.radius(), std::sqrt(0.5), 1e-12);
}

TEST(CircleOnDiameter, Examples) {
  const Circle2d a = circle_on_diameter<double>({0, 0}, {2, 0});
  expect_point(a.center(), {1, 0});
  EXPECT_NEAR(a.radius(), 1.0, 1e-15);
  const Circle2d b = circle_on_diameter<double>({2, 0}, {0, 0});
  expect_point(b.center(), {1, 0});
  const Circle2d c = circle_on_diameter<double>({1, 1}, {3, 5});
  expect_point(c.center(), {2, 3});
  EXPECT_NEAR(c.radius(), std::sqrt(5.0), 1e-15);
  EXPECT_EQ(kind_of_throw([] { circle_on_diameter<double>({1, 1}, {1, 1}); }), ErrorKind::DegenerateInput);
}

TEST(Inversion, UnitCircle) {
  expect_point(invert_unit<double>({0.5, 0}), {2, 0});
  expect_point(invert_unit<double>({0.3, 0.4}), {1.2, 1.6});
  EXPECT_EQ(kind_of_throw([] { invert_unit<double>({0, 0}); }), ErrorKind::OriginInversion);
}

TEST(Inversion, GeneralCircle) {
  expect_point(invert_in_circle<double>({0.5, 0}, Circle2d::unit()), {2, 0});
  expect_point(invert_in_circle<double>({0.6, 0.8}, Circle2d::unit()), {0.6, 0.8});
  expect_point(invert_in_circle<double>({2, 0}, Circle2d({1, 0}, 2)), {5, 0});
  EXPECT_EQ(kind_of_throw([] { invert_in_circle<double>({1, 0}, Circle2d({1, 0}, 2)); }),
            ErrorKind::CenterInversion);
}

TEST(Reflection, Examples) {
  expect_point(reflect_in_line<double>({1, 2}, Vector2d(0, 1), 0.0), {1, -2});
  expect_point(reflect_in_line<double>({4, 1}, Vector2d(0, 1), 1.0), {4, 1});
  expect_point(reflect_in_line<double>({2, 0}, Vector2d(1, 0), 1.0), {0, 0});
  expect_point(reflect_real<double>({1, 2}), {1, -2});
  EXPECT_EQ(kind_of_throw([] { reflect_in_line<double>({1, 2}, Vector2d(0, 0), 0.0); }),
            ErrorKind::DegenerateInput);
}

TEST(Predicates, Examples) {
  const auto orth = circles_orthogonal(Circle2d::unit(), Circle2d({std::sqrt(2.0), 0}, 1));
  EXPECT_TRUE(orth.holds);
  EXPECT_NEAR(orth.residual, 0.0, 1e-15);
  EXPECT_TRUE(collinear<double>({0, 0}, {1, 1}, {2, 2}).holds);
  EXPECT_FALSE(collinear<double>({0, 0}, {1, 1}, {2, 2.1}).holds);
  EXPECT_TRUE(line_tangent_to_circle(Line2d(Vector2d(1, 0), 1.0), Circle2d::unit()).holds);
  EXPECT_FALSE(line_tangent_to_circle(Line2d(Vector2d(1, 0), 0.5), Circle2d::unit()).holds);
  EXPECT_TRUE(is_on<double>({0.6, 0.8}, Circle2d::unit()).holds);
  EXPECT_FALSE(is_on<double>({0.6, 0.81}, Circle2d::unit()).holds);
}

TEST(Selectors, SidesAndCloserTo) {
  const std::vector<Point2d> pts = {{0, 1}, {0, -1}};
  expect_point(select_point(pts, Selectord::left_of({-1, 0}, {1, 0})), {0, 1});
  expect_point(select_point(pts, Selectord::right_of({-1, 0}, {1, 0})), {0, -1});
  expect_point(select_point(pts, Selectord::closer_to({0, 2}, {0, -2})), {0, 1});
  EXPECT_EQ(kind_of_throw([&] { select_point(pts, Selectord::nearest_to({5, 0})); }),
            ErrorKind::AmbiguousSelection);
}

// --- Properties -----------------------------------------------------------------

TEST(Properties, InversionIsAnInvolutionAndFixesTheCircle) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Circle2d c({uniform(rng, -3, 3), uniform(rng, -3, 3)}, uniform(rng, 0.1, 4));
    const Point2d p(uniform(rng, -5, 5), uniform(rng, -5, 5));
    if ((p - c.center()).norm() < 1e-3) continue;
    const Point2d q = invert_in_circle(p, c);
    const Point2d back = invert_in_circle(q, c);
    EXPECT_LE((back - p).norm() / magnitude_scale(p), 1e-10);
    // |p − c| |q − c| = r²
    EXPECT_NEAR((p - c.center()).norm() * (q - c.center()).norm() / (c.radius() * c.radius()), 1.0, 1e-12);
    const double t = uniform(rng, 0, 2 * std::numbers::pi);
    const Point2d on = c.center() + c.radius() * Point2d(std::cos(t), std::sin(t));
    EXPECT_LE((invert_in_circle(on, c) - on).norm() / magnitude_scale(on), 1e-12);
  }
}

TEST(Properties, IntersectionsLieOnBothCarriers) {
  Rng rng(12);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const Circle2d a({uniform(rng, -2, 2), uniform(rng, -2, 2)}, uniform(rng, 0.2, 3));
    const Circle2d b({uniform(rng, -2, 2), uniform(rng, -2, 2)}, uniform(rng, 0.2, 3));
    std::vector<Point2d> pts;
    try {
      pts = circle_circle_points(a, b);
    } catch (const GeometryError&) {
      continue;
    }
    for (const auto& p : pts) {
      EXPECT_TRUE(is_on(p, a).holds);
      EXPECT_TRUE(is_on(p, b).holds);
      ++checked;
    }
    const Line2d l = line_through<double>(a.center(), b.center() + Point2d(0.3, -0.7));
    try {
      for (const auto& p : line_circle_points(l, a)) {
        EXPECT_TRUE(is_on(p, l).holds);
        EXPECT_TRUE(is_on(p, a).holds);
      }
    } catch (const GeometryError&) {
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(Properties, ReflectionIsAnIsometricInvolution) {
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const Vector2d a(uniform(rng, -2, 2), uniform(rng, -2, 2));
    if (a.norm() < 1e-3) continue;
    const double t = uniform(rng, -2, 2);
    const Point2d p(uniform(rng, -4, 4), uniform(rng, -4, 4));
    const Point2d q(uniform(rng, -4, 4), uniform(rng, -4, 4));
    const Point2d rp = reflect_in_line<double>(p, a, t);
    const Point2d rq = reflect_in_line<double>(q, a, t);
    EXPECT_LE((reflect_in_line<double>(rp, a, t) - p).norm(), 1e-12 * magnitude_scale(p));
    EXPECT_NEAR((rp - rq).norm(), (p - q).norm(), 1e-12 * magnitude_scale(p, q));
  }
}

TEST(Properties, CircleThroughPassesThroughItsPoints) {
  Rng rng(14);
  for (int i = 0; i < 500; ++i) {
    const Point2d p(uniform(rng, -3, 3), uniform(rng, -3, 3));
    const Point2d q(uniform(rng, -3, 3), uniform(rng, -3, 3));
    const Point2d r(uniform(rng, -3, 3), uniform(rng, -3, 3));
    if (std::abs(collinear(p, q, r).residual) < 1e-3) continue;
    const Circle2d c = circle_through(p, q, r);
    EXPECT_TRUE(is_on(p, c).holds);
    EXPECT_TRUE(is_on(q, c).holds);
    EXPECT_TRUE(is_on(r, c).holds);
  }
}
