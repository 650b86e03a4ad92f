// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Every sweep is seeded so the printed residuals are reproducible.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hypmid/constructions.hpp"
#include "hypmid/hypmetric.hpp"
#include "hypmid/script.hpp"
#include "hypmid/verify.hpp"

namespace fs = std::filesystem;
using namespace hypmid;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double claim_residual(const DiagnosticsReport& r, std::string_view name) {
  const Claim* c = r.find(name);
  if (c == nullptr || c->status == ClaimStatus::ConditionNotMet) return 0.0;
  return c->residual;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 1. Cross-ratio distance against the closed forms.
Outcome metric_cross_validation() {
  SweepConfig cfg;
  Rng h2(1001), b2(1002);
  double worst = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 1000; ++i) {
    const auto [x, y] = sample_halfplane_pair(h2, cfg);
    worst = std::max(worst, relative(rho_via_cross_ratio(Model::HalfPlane, x, y), rho_halfplane(x, y)));
    const auto [p, q] = sample_disk_pair(b2, cfg);
    worst = std::max(worst, relative(rho_via_cross_ratio(Model::Disk, p, q), rho_disk(p, q)));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst <= 1e-9 && secs < 1.0, "max relative " + fmt("%.3e", worst) + ", " + fmt("%.3f", secs) + " s"};
}

// 2. The half-plane methods, the angle formula and the oracle agree.
Outcome halfplane_methods() {
  SweepConfig cfg;
  Rng rng(2002);
  double spread = 0.0, rho_gap = 0.0;
  int inapplicable = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 1000; ++i) {
    const auto [x, y] = sample_halfplane_pair(rng, cfg);
    const Point2d ref = midpoint_oracle(Model::HalfPlane, x, y);
    for (MethodId m : {MethodId::I, MethodId::II, MethodId::III, MethodId::IV, MethodId::Angles}) {
      try {
        const Point2d z = midpoint(Model::HalfPlane, x, y, m).z;
        spread = std::max(spread, (z - ref).norm() / magnitude_scale(ref));
        rho_gap = std::max(rho_gap, std::abs(rho_halfplane(x, z) - rho_halfplane(z, y)));
      } catch (const MethodInapplicable&) {
        ++inapplicable;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {spread <= 1e-8 && rho_gap <= 1e-9 && secs < 2.0,
          "max |z - z_ref| " + fmt("%.3e", spread) + ", max rho gap " + fmt("%.3e", rho_gap) +
              ", inapplicable " + std::to_string(inapplicable) + ", " + fmt("%.3f", secs) + " s"};
}

// 3. The disk methods agree, and u, v, s, t, k sit on L(0, z).
Outcome disk_methods() {
  SweepConfig cfg;
  Rng rng(3003);
  double spread = 0.0, collinear = 0.0;
  int failures = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 1000; ++i) {
    const auto [x, y] = sample_disk_pair(rng, cfg);
    const Point2d ref = midpoint_oracle(Model::Disk, x, y);
    for (MethodId m : {MethodId::I, MethodId::II, MethodId::III, MethodId::IV, MethodId::V, MethodId::VI,
                       MethodId::Angles}) {
      try {
        spread = std::max(spread, (midpoint(Model::Disk, x, y, m).z - ref).norm());
      } catch (const GeometryError&) {
        ++failures;
      }
    }
    const DiagnosticsReport r = lemma46_report(x, y);
    for (const char* name : {"0, z, u collinear", "0, z, v collinear", "0, z, s collinear", "0, z, t collinear",
                             "0, z, k collinear"}) {
      collinear = std::max(collinear, claim_residual(r, name));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {spread <= 1e-8 && collinear <= 1e-9 && failures == 0 && secs < 5.0,
          "max |z - z_ref| " + fmt("%.3e", spread) + ", max collinearity " + fmt("%.3e", collinear) +
              ", method errors " + std::to_string(failures) + ", " + fmt("%.3f", secs) + " s"};
}

// 4. Algebraic identities around w, a, u and the inversion products.
Outcome algebraic_identities() {
  SweepConfig cfg;
  Rng h2(4004), b2(4005);
  double worst = 0.0;
  std::string worst_name;
  auto take = [&](const DiagnosticsReport& r, std::string_view name) {
    const double v = claim_residual(r, name);
    if (v > worst) {
      worst = v;
      worst_name = name;
    }
  };
  for (int i = 0; i < 1000; ++i) {
    const auto [x, y] = sample_halfplane_pair(h2, cfg);
    const auto [ux, uy] = normalize_to_unit_carrier(x, y);
    const DiagnosticsReport r = lemma31_report(ux, uy);
    for (const char* name : {"w.z = 1 (L(w,z) tangent to S1)", "a.w = 1", "u.(2a - w) = 1"}) take(r, name);

    const auto [p, q] = sample_disk_pair(b2, cfg);
    const DiagnosticsReport d = lemma46_report(p, q);
    for (const char* name : {"r_w^2 + 1 = |w|^2", "w.a = 1", "|x-w||y-w| = r_w^2", "|x_*-w||y_*-w| = r_w^2",
                             "|x^*-w||y^*-w| = r_w^2"}) {
      take(d, name);
    }
  }
  return {worst <= 1e-9, "max scaled residual " + fmt("%.3e", worst) + (worst_name.empty() ? "" : " (" + worst_name + ")")};
}

// 5. Projection doubles distance.
Outcome projection() {
  SweepConfig cfg;
  Rng rng(5005);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto [x, y] = sample_unit_arc_pair(rng, cfg);
    worst = std::max(worst, std::abs(2.0 * rho_halfplane(x, y) - rho_disk(projection_pr(x), projection_pr(y))));
  }
  const double r = std::sqrt(3.0) / 2.0;
  const Point2d x(0.5, r), y(-0.5, r);
  const double instance = std::abs(rho_disk(projection_pr(x), projection_pr(y)) - 2.0 * std::log(3.0));
  const double twice = std::abs(2.0 * rho_halfplane(x, y) - 2.0 * std::log(3.0));
  return {worst <= 1e-9 && instance <= 1e-12 && twice <= 1e-12,
          "max gap " + fmt("%.3e", worst) + ", 2 log 3 instance " + fmt("%.3e", std::max(instance, twice))};
}

// 6. The scale chain multiplies distance from 0.
Outcome scale_chain() {
  Rng rng(6006);
  double dist = 0.0, modulus = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double t = uniform(rng, -std::numbers::pi, std::numbers::pi);
    const double m = uniform(rng, 0.1, 0.6);
    const PointChain chain = scale_sequence(Point2d(m * std::cos(t), m * std::sin(t)), 10);
    for (std::size_t k = 0; k < chain.points.size(); ++k) {
      const double kk = static_cast<double>(k + 1);
      dist = std::max(dist, std::abs(rho_disk<double>(Point2d::Zero(), chain.points[k]) - kk * chain.c));
      modulus = std::max(modulus, std::abs(chain.points[k].norm() - std::tanh(kk * std::atanh(m))));
    }
  }
  return {dist <= 1e-9 && modulus <= 1e-9,
          "max |rho - k c| " + fmt("%.3e", dist) + ", max modulus gap " + fmt("%.3e", modulus)};
}

// 7. The orthogonality predicate flips with cos∠x0y − |x||y|.
Outcome orthogonality_criterion() {
  int disagreements = 0, flips = 0;
  for (const auto& [mx, my] : {std::pair{0.5, 0.7}, std::pair{0.3, 0.9}, std::pair{0.8, 0.85}}) {
    int prev = 0;
    for (int i = 0; i < 100; ++i) {
      const double angle = 0.01 + (std::numbers::pi - 0.02) * i / 99.0;
      const OrthogonalityCriterion c =
          prop48_orthogonality(Point2d(mx, 0.0), Point2d(my * std::cos(angle), my * std::sin(angle)));
      const int s_orth = (c.orthogonality_residual > 0) - (c.orthogonality_residual < 0);
      const int s_crit = (c.criterion_residual > 0) - (c.criterion_residual < 0);
      if (s_orth != -s_crit || c.orthogonal != c.criterion_holds) ++disagreements;
      if (prev != 0 && s_crit != prev) ++flips;
      prev = s_crit;
    }
  }
  return {disagreements == 0 && flips == 3,
          std::to_string(disagreements) + " disagreements in 300 samples, " + std::to_string(flips) + " sign flips"};
}

// 8. Collinearity through 0 and the ratio equality on semicircle arcs.
Outcome circle_via_origin() {
  SweepConfig cfg;
  Rng rng(8008);
  double collinear = 0.0, ratio = 0.0;
  int semicircles = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto [x, y] = sample_disk_pair(rng, cfg);
    const DiagnosticsReport r = prop47_report(x, y);
    collinear = std::max({collinear, claim_residual(r, "0, b, d collinear"), claim_residual(r, "0, b', d' collinear")});
  }
  for (int i = 0; i < 50; ++i) {
    const auto [x, y] = sample_semicircle_pair(rng, cfg);
    const DiagnosticsReport r = prop47_report(x, y);
    const Claim* c = r.find("|z,x,x^*,z'| = |z,y,y^*,z'|");
    if (c != nullptr && c->status != ClaimStatus::ConditionNotMet) {
      ++semicircles;
      ratio = std::max(ratio, c->residual);
    }
  }
  return {collinear <= 1e-9 && ratio <= 1e-7 && semicircles == 50,
          "max collinearity " + fmt("%.3e", collinear) + ", max ratio gap " + fmt("%.3e", ratio) + " over " +
              std::to_string(semicircles) + " semicircles"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 9. Corpus and broken fixtures.
Outcome dsl_corpus() {
  int scripts = 0, bad = 0, fixtures = 0;
  std::string first_problem;
  auto note = [&](const std::string& what) {
    ++bad;
    if (first_problem.empty()) first_problem = what;
  };
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(HYPMID_SCRIPTS_DIR)) {
    if (e.path().extension() == ".hgc") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    ++scripts;
    try {
      const std::string text = slurp(f);
      const script::Program p = script::parse(text);
      const std::string once = script::format(p);
      if (script::format(script::parse(once)) != once || !(script::parse(once) == p)) note(f.filename().string() + " fmt");
      if (!script::evaluate(p).all_passed()) note(f.filename().string() + " assertions");
    } catch (const std::exception& e) {
      note(f.filename().string() + ": " + e.what());
    }
  }
  std::vector<fs::path> broken;
  for (const auto& e : fs::directory_iterator(HYPMID_FIXTURES_DIR "/broken")) broken.push_back(e.path());
  std::sort(broken.begin(), broken.end());
  for (const auto& f : broken) {
    ++fixtures;
    const std::string text = slurp(f);
    // First line: "# expect-error: Kind L:C"
    std::istringstream head(text.substr(0, text.find('\n')));
    std::string hash, tag, kind, pos;
    head >> hash >> tag >> kind >> pos;
    try {
      script::parse(text);
      note(f.filename().string() + " parsed");
    } catch (const script::ParseError& e) {
      const std::string got = std::string(script::to_string(e.kind())) + " " + std::to_string(e.loc().line) + ":" +
                              std::to_string(e.loc().column);
      if (got != kind + " " + pos) note(f.filename().string() + " got " + got);
    }
  }
  std::string detail = std::to_string(scripts) + " scripts, " + std::to_string(fixtures) + " broken fixtures";
  if (!first_problem.empty()) detail += ", first problem: " + first_problem;
  return {bad == 0 && scripts > 0 && fixtures >= 10, detail};
}

// 10. Known values.
Outcome spot_checks() {
  const Point2d a = midpoint(Model::HalfPlane, {0.0, 1.0}, {0.0, 4.0}).z;
  const Point2d b = midpoint(Model::Disk, {0.0, 0.0}, {0.8, 0.0}).z;
  const BisectorCircle c = bisector_circle({0.5, 0.0}, {0.0, 0.25});
  const double worst = std::max({(a - Point2d(0.0, 2.0)).cwiseAbs().maxCoeff(),
                                 (b - Point2d(0.5, 0.0)).cwiseAbs().maxCoeff(),
                                 (c.w - Point2d(2.5, -1.0)).cwiseAbs().maxCoeff(), std::abs(c.r_w - 2.5)});
  return {worst <= 1e-12, "max abs error " + fmt("%.3e", worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"metric cross-validation", metric_cross_validation},
      {"half-plane methods agree", halfplane_methods},
      {"disk methods agree", disk_methods},
      {"algebraic identities", algebraic_identities},
      {"projection doubles distance", projection},
      {"scale chain", scale_chain},
      {"orthogonality criterion", orthogonality_criterion},
      {"circle through 0, x, y", circle_via_origin},
      {"script corpus", dsl_corpus},
      {"known values", spot_checks},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu  %-28s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
