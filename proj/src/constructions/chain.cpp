#include <cmath>
#include <string>

#include "internal.hpp"

namespace hypmid {

PointChain scale_sequence(const Point2d& x1, int n, const Toleranced& tol) {
  require_in_domain(Model::Disk, x1);
  if (x1.norm() <= tol.eps_degenerate) {
    throw GeometryError(ErrorKind::DegenerateInput, "X1 must differ from the origin");
  }
  if (n < 1) throw GeometryError(ErrorKind::DegenerateInput, "chain length must be at least 1");

  auto X = [](int k) { return "X" + std::to_string(k); };
  auto M = [](int k) { return "M" + std::to_string(k); };

  Construction c(Model::Disk, tol);
  c.given("X1", x1);
  c.line("L_0X", kOrigin, "X1");
  c.perpendicular("P0", "L_0X", kOrigin);
  c.intersect("M0", "P0", kUnitCircle, c.left_of(kOrigin, "X1"));
  if (n > 1) {
    c.perpendicular("P1", "L_0X", "X1");
    c.intersect("M1", "P1", kUnitCircle, c.left_of(kOrigin, "X1"));
  }

  PointChain chain;
  chain.base = x1;
  chain.c = rho_disk<double>(Point2d::Zero(), x1);
  chain.points.push_back(x1);
  for (int k = 1; k < n; ++k) {
    if (1.0 - c.point(X(k)).norm() < kChainSaturation) {
      throw GeometryError(ErrorKind::ChainSaturated,
                          X(k) + " is within 1e-12 of the boundary; the chain cannot continue");
    }
    const std::string chord = "L_" + M(k - 1) + X(k);
    const std::string next_n = "N" + std::to_string(k + 1);
    const std::string next_p = "P" + std::to_string(k + 1);
    c.line(chord, M(k - 1), X(k));
    c.intersect(next_n, chord, kUnitCircle, c.right_of(kOrigin, "X1"));
    c.perpendicular(next_p, "L_0X", next_n);
    c.intersect(X(k + 1), next_p, "L_0X", c.unique());
    if (k + 1 < n) c.intersect(M(k + 1), next_p, kUnitCircle, c.left_of(kOrigin, "X1"));
    chain.points.push_back(c.point(X(k + 1)));
  }
  chain.trace = c.finish(X(n), MethodId::Auto);
  return chain;
}

}  // namespace hypmid
