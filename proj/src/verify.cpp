#include "hypmid/verify.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace hypmid {

Suite parse_suite(std::string_view text) {
  if (text == "h2") return Suite::HalfPlane;
  if (text == "b2") return Suite::Disk;
  if (text == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + std::string(text) + "' (expected h2, b2 or all)");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::HalfPlane: return "h2";
    case Suite::Disk: return "b2";
    case Suite::All: return "all";
  }
  return "all";
}

bool SweepConfig::valid() const {
  return samples > 0 && max_modulus > 0.0 && max_modulus < 1.0 && min_separation >= 0.0 &&
         min_modulus_gap >= 0.0 && min_noncollinear >= 0.0 && min_noncollinear < 1.0 && tol > 0.0;
}

double uniform(Rng& rng, double lo, double hi) {
  // Built from raw 53-bit draws so the stream is the same on every standard library.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Point2d sample_disk_point(Rng& rng, double max_modulus) {
  const double r = max_modulus * std::sqrt(uniform(rng, 0.0, 1.0));
  const double t = uniform(rng, -std::numbers::pi, std::numbers::pi);
  return {r * std::cos(t), r * std::sin(t)};
}

namespace {

double sin_angle(const Point2d& x, const Point2d& y) {
  const double n = x.norm() * y.norm();
  return n > 0.0 ? std::abs(cross2<double>(x, y)) / n : 0.0;
}

constexpr int kMaxRejections = 100000;

template <typename F>
auto rejection(Rng& rng, F&& draw) {
  for (int i = 0; i < kMaxRejections; ++i) {
    if (auto p = draw(rng)) return *p;
  }
  throw std::runtime_error("sampler filters reject every candidate");
}

}  // namespace

std::pair<Point2d, Point2d> sample_disk_pair(Rng& rng, const SweepConfig& cfg) {
  return rejection(rng, [&](Rng& g) -> std::optional<std::pair<Point2d, Point2d>> {
    const Point2d x = sample_disk_point(g, cfg.max_modulus);
    const Point2d y = sample_disk_point(g, cfg.max_modulus);
    if ((x - y).norm() < cfg.min_separation) return std::nullopt;
    if (std::abs(x.norm() - y.norm()) < cfg.min_modulus_gap) return std::nullopt;
    if (sin_angle(x, y) < cfg.min_noncollinear) return std::nullopt;
    return std::pair{x, y};
  });
}

std::pair<Point2d, Point2d> sample_equal_moduli_pair(Rng& rng, const SweepConfig& cfg) {
  return rejection(rng, [&](Rng& g) -> std::optional<std::pair<Point2d, Point2d>> {
    const double r = uniform(g, 0.05, cfg.max_modulus);
    const double s = uniform(g, -std::numbers::pi, std::numbers::pi);
    const double t = uniform(g, -std::numbers::pi, std::numbers::pi);
    const Point2d x(r * std::cos(s), r * std::sin(s));
    const Point2d y(r * std::cos(t), r * std::sin(t));
    if ((x - y).norm() < cfg.min_separation || sin_angle(x, y) < cfg.min_noncollinear) return std::nullopt;
    return std::pair{x, y};
  });
}

std::pair<Point2d, Point2d> sample_diameter_pair(Rng& rng, const SweepConfig& cfg) {
  return rejection(rng, [&](Rng& g) -> std::optional<std::pair<Point2d, Point2d>> {
    const double t = uniform(g, -std::numbers::pi, std::numbers::pi);
    const Point2d u(std::cos(t), std::sin(t));
    const double a = uniform(g, -cfg.max_modulus, cfg.max_modulus);
    const double b = uniform(g, -cfg.max_modulus, cfg.max_modulus);
    if (std::abs(a - b) < cfg.min_separation) return std::nullopt;
    return std::pair<Point2d, Point2d>{a * u, b * u};
  });
}

std::pair<Point2d, Point2d> sample_halfplane_pair(Rng& rng, const SweepConfig& cfg) {
  return rejection(rng, [&](Rng& g) -> std::optional<std::pair<Point2d, Point2d>> {
    const double c = uniform(g, -3.0, 3.0);
    const double r = std::exp(uniform(g, std::log(0.1), std::log(10.0)));
    const double a = uniform(g, 0.02, std::numbers::pi - 0.02);
    const double b = uniform(g, 0.02, std::numbers::pi - 0.02);
    const Point2d x(c + r * std::cos(a), r * std::sin(a));
    const Point2d y(c + r * std::cos(b), r * std::sin(b));
    if ((x - y).norm() < cfg.min_separation * r) return std::nullopt;
    return std::pair{x, y};
  });
}

std::pair<Point2d, Point2d> sample_vertical_pair(Rng& rng, const SweepConfig& cfg) {
  return rejection(rng, [&](Rng& g) -> std::optional<std::pair<Point2d, Point2d>> {
    const double c = uniform(g, -3.0, 3.0);
    const double a = std::exp(uniform(g, std::log(0.05), std::log(20.0)));
    const double b = std::exp(uniform(g, std::log(0.05), std::log(20.0)));
    if (std::abs(a - b) < cfg.min_separation) return std::nullopt;
    return std::pair<Point2d, Point2d>{{c, a}, {c, b}};
  });
}

std::pair<Point2d, Point2d> sample_unit_arc_pair(Rng& rng, const SweepConfig& cfg) {
  return rejection(rng, [&](Rng& g) -> std::optional<std::pair<Point2d, Point2d>> {
    const double a = uniform(g, 0.02, std::numbers::pi - 0.02);
    const double b = uniform(g, 0.02, std::numbers::pi - 0.02);
    if (std::abs(a - b) < std::max(cfg.min_separation, 1e-3)) return std::nullopt;
    return std::pair<Point2d, Point2d>{{std::cos(a), std::sin(a)}, {std::cos(b), std::sin(b)}};
  });
}

std::pair<Point2d, Point2d> sample_semicircle_pair(Rng& rng, const SweepConfig& cfg) {
  // Pick the carrier S¹(a, r_a) ⊥ S¹, a point x on its inner arc, and put y^*
  // diametrically opposite x^*; y is the inverse of y^*.
  return rejection(rng, [&](Rng& g) -> std::optional<std::pair<Point2d, Point2d>> {
    const double t = uniform(g, -std::numbers::pi, std::numbers::pi);
    const double r_a = std::exp(uniform(g, std::log(0.2), std::log(5.0)));
    const Point2d a = std::sqrt(1.0 + r_a * r_a) * Point2d(std::cos(t), std::sin(t));
    const double phi = uniform(g, -std::numbers::pi, std::numbers::pi);
    const Point2d x = a + r_a * Point2d(std::cos(phi), std::sin(phi));
    if (!(x.norm() <= cfg.max_modulus)) return std::nullopt;
    const Point2d ystar = 2.0 * a - invert_unit<double>(x);
    if (!(ystar.norm() > 1.0)) return std::nullopt;
    const Point2d y = invert_unit<double>(ystar);
    if (y.norm() > cfg.max_modulus || (x - y).norm() < cfg.min_separation) return std::nullopt;
    if (std::abs(x.norm() - y.norm()) < cfg.min_modulus_gap) return std::nullopt;
    if (sin_angle(x, y) < cfg.min_noncollinear) return std::nullopt;
    return std::pair{x, y};
  });
}

bool SweepReport::all_pass() const {
  for (const auto& c : claims) {
    if (!c.pass()) return false;
  }
  return true;
}

std::string SweepReport::to_text() const {
  std::string out;
  char buf[512];
  std::snprintf(buf, sizeof buf, "suite %s  samples %d  seed %llu  tol %.3g\n",
                std::string(to_string(config.suite)).c_str(), config.samples,
                static_cast<unsigned long long>(config.seed), config.tol);
  out += buf;
  int failing = 0;
  for (const auto& c : claims) {
    std::snprintf(buf, sizeof buf, "%-4s  %-18s  %-52s  max %.3e  n %d  skipped %d\n",
                  c.pass() ? "PASS" : "FAIL", c.group.c_str(), c.name.c_str(), c.max_residual, c.evaluated,
                  c.skipped);
    out += buf;
    if (!c.pass()) ++failing;
  }
  if (failing == 0) {
    out += "all " + std::to_string(claims.size()) + " claims pass\n";
  } else {
    out += std::to_string(failing) + " of " + std::to_string(claims.size()) + " claims FAIL\n";
  }
  return out;
}

namespace {

class Ledger {
 public:
  Ledger(double threshold) : threshold_(threshold) {}

  void add(const std::string& group, const std::string& name, double residual) {
    ClaimSummary& c = at(group, name);
    const double r = std::abs(residual);
    ++c.evaluated;
    if (!(r <= threshold_)) ++c.failures;  // NaN counts as a failure
    if (!(r <= c.max_residual)) c.max_residual = r;
  }
  void skip(const std::string& group, const std::string& name) { ++at(group, name).skipped; }
  void fail(const std::string& group, const std::string& name) {
    ClaimSummary& c = at(group, name);
    ++c.evaluated;
    ++c.failures;
  }

  void report(const std::string& group, const DiagnosticsReport& r) {
    for (const auto& claim : r.claims) {
      if (claim.status == ClaimStatus::ConditionNotMet) {
        skip(group, claim.name);
      } else {
        add(group, claim.name, claim.residual);
      }
    }
  }

  std::vector<ClaimSummary> take() { return std::move(claims_); }

 private:
  ClaimSummary& at(const std::string& group, const std::string& name) {
    const auto key = group + '\n' + name;
    auto it = index_.find(key);
    if (it == index_.end()) {
      it = index_.emplace(key, claims_.size()).first;
      claims_.push_back({group, name});
    }
    return claims_[it->second];
  }

  double threshold_;
  std::vector<ClaimSummary> claims_;
  std::map<std::string, std::size_t> index_;
};

double relative(double a, double b) { return (a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

/// Runs `body`; an unexpected geometry error is charged to `name`.
template <typename F>
void guarded(Ledger& l, const std::string& group, const std::string& name, F&& body) {
  try {
    body();
  } catch (const MethodInapplicable&) {
    l.skip(group, name);
  } catch (const GeometryError&) {
    l.fail(group, name);
  }
}

void method_claims(Ledger& l, const std::string& group, Model model, const Point2d& x, const Point2d& y,
                   MethodId m, const Toleranced& tol) {
  const std::string id(to_string(m));
  const std::string oracle = "method " + id + " = oracle";
  try {
    const MidpointResult r = midpoint(model, x, y, m, tol);
    l.add(group, oracle, r.oracle_distance);
    l.add(group, "method " + id + " rho(x,z) = rho(z,y)", r.residual_equal_distance);
    l.add(group, "method " + id + " z on carrier", r.residual_on_geodesic);
  } catch (const MethodInapplicable&) {
    l.skip(group, oracle);
  } catch (const GeometryError&) {
    l.fail(group, oracle);
  }
}

void halfplane_sample(Ledger& l, Rng& rng, const SweepConfig& cfg, const Toleranced& tol) {
  const auto [x, y] = sample_halfplane_pair(rng, cfg);
  guarded(l, "h2/metric", "cross-ratio distance = closed form", [&] {
    l.add("h2/metric", "cross-ratio distance = closed form",
          relative(rho_via_cross_ratio(Model::HalfPlane, x, y, tol), rho_halfplane(x, y)));
  });
  for (MethodId m : {MethodId::I, MethodId::II, MethodId::III, MethodId::IV, MethodId::Angles}) {
    method_claims(l, "h2/methods", Model::HalfPlane, x, y, m, tol);
  }
  guarded(l, "h2/unit carrier", "normalization", [&] {
    const auto [ux, uy] = normalize_to_unit_carrier(x, y, tol);
    l.report("h2/unit carrier", lemma31_report(ux, uy, tol));
  });

  const auto [vx, vy] = sample_vertical_pair(rng, cfg);
  method_claims(l, "h2/vertical", Model::HalfPlane, vx, vy, MethodId::Case1, tol);

  const auto [px, py] = sample_unit_arc_pair(rng, cfg);
  guarded(l, "h2/projection", "2 rho_H(x,y) = rho_B(Pr x, Pr y)", [&] {
    l.add("h2/projection", "2 rho_H(x,y) = rho_B(Pr x, Pr y)",
          relative(2.0 * rho_halfplane(px, py), rho_disk(projection_pr(px, tol), projection_pr(py, tol))));
  });
}

void disk_sample(Ledger& l, Rng& rng, const SweepConfig& cfg, const Toleranced& tol) {
  const auto [x, y] = sample_disk_pair(rng, cfg);
  guarded(l, "b2/metric", "cross-ratio distance = closed form", [&] {
    l.add("b2/metric", "cross-ratio distance = closed form",
          relative(rho_via_cross_ratio(Model::Disk, x, y, tol), rho_disk(x, y)));
  });
  for (MethodId m : {MethodId::I, MethodId::II, MethodId::III, MethodId::IV, MethodId::V, MethodId::VI,
                     MethodId::Angles}) {
    method_claims(l, "b2/methods", Model::Disk, x, y, m, tol);
  }
  guarded(l, "b2/bisector circle", "report", [&] { l.report("b2/bisector circle", lemma46_report(x, y, tol)); });
  guarded(l, "b2/circle via 0", "report", [&] { l.report("b2/circle via 0", prop47_report(x, y, tol)); });
  guarded(l, "b2/orthogonality", "orthogonality tracks cos(x0y) - |x||y|", [&] {
    const OrthogonalityCriterion c = prop48_orthogonality(x, y, tol);
    l.add("b2/orthogonality", "orthogonality tracks cos(x0y) - |x||y|",
          c.orthogonality_residual + c.criterion_residual);
  });

  const auto [sx, sy] = sample_semicircle_pair(rng, cfg);
  guarded(l, "b2/semicircle", "report", [&] { l.report("b2/semicircle", prop47_report(sx, sy, tol)); });

  const auto [ex, ey] = sample_equal_moduli_pair(rng, cfg);
  method_claims(l, "b2/equal moduli", Model::Disk, ex, ey, MethodId::EqualModuli, tol);

  const auto [dx, dy] = sample_diameter_pair(rng, cfg);
  method_claims(l, "b2/diameter", Model::Disk, dx, dy, MethodId::Case1, tol);

  const double t = uniform(rng, -std::numbers::pi, std::numbers::pi);
  const double m = uniform(rng, 0.1, 0.6);
  const Point2d x1(m * std::cos(t), m * std::sin(t));
  guarded(l, "b2/scale chain", "rho(0,X_k) = k rho(0,X_1)", [&] {
    const PointChain chain = scale_sequence(x1, 10, tol);
    double dist = 0.0;
    double modulus = 0.0;
    for (std::size_t k = 0; k < chain.points.size(); ++k) {
      const double kk = static_cast<double>(k + 1);
      dist = std::max(dist, std::abs(relative(rho_disk<double>(Point2d::Zero(), chain.points[k]), kk * chain.c)));
      modulus = std::max(modulus, std::abs(chain.points[k].norm() - std::tanh(kk * std::atanh(m))));
    }
    l.add("b2/scale chain", "rho(0,X_k) = k rho(0,X_1)", dist);
    l.add("b2/scale chain", "|X_k| = tanh(k artanh |X_1|)", modulus);
  });
}

}  // namespace

SweepReport run_sweep(const SweepConfig& cfg) {
  if (!cfg.valid()) throw std::invalid_argument("invalid sweep configuration");
  SweepReport report;
  report.config = cfg;
  Ledger ledger(cfg.tol);
  const Toleranced tol;
  // Independent streams per model keep the h2 results identical whether or
  // not the disk suite also runs.
  Rng h2_rng(cfg.seed);
  Rng b2_rng(cfg.seed ^ 0x9E3779B97F4A7C15ull);
  for (int i = 0; i < cfg.samples; ++i) {
    if (cfg.suite != Suite::Disk) halfplane_sample(ledger, h2_rng, cfg, tol);
    if (cfg.suite != Suite::HalfPlane) disk_sample(ledger, b2_rng, cfg, tol);
  }
  report.claims = ledger.take();
  return report;
}

}  // namespace hypmid
