#pragma once

// Ruler-and-compass midpoint constructions in H² and B², the auxiliary
// points they rely on, and numeric reports for the identities behind them.
// Every construction runs through `Construction`, so the returned trace is
// the exact sequence of drawn lines, circles and intersections.

#include <string>
#include <vector>

#include "hypmid/geom2d.hpp"
#include "hypmid/hypmetric.hpp"
#include "hypmid/trace.hpp"

namespace hypmid {

struct MidpointResult {
  Point2d z;
  ConstructionTrace trace;
  double residual_equal_distance = 0.0;  // |ρ(x,z) − ρ(z,y)|
  double residual_on_geodesic = 0.0;     // scale-normalized carrier residual
  double oracle_distance = 0.0;          // |z − midpoint_oracle(x, y)|
  bool flagged = false;                  // oracle disagreement above kOracleFlag
};

inline constexpr double kOracleFlag = 1e-8;

/// Disk Method I refuses pairs with ||x| − |y|| at or below this gap: w and
/// r_w grow like 1/||y|² − |x|²| and the drawn circles lose the digits the
/// residual checks need. Methods II–VI refuse only ||x| − |y|| ≤
/// eps_degenerate; their auxiliary points stay well conditioned. Auto switches to the equal-moduli construction below
/// eps_degenerate and to Method II inside the band.
inline constexpr double kEqualModuliGuard = 1e-6;

// --- Upper half-plane -------------------------------------------------------

/// x, y on one vertical line: Im z = √(Im x · Im y).
MidpointResult h2_case1(const Point2d& x, const Point2d& y, const Toleranced& tol = {});
/// Tangent from w = L(x,y) ∩ ∂H²; MethodInapplicable(ParallelLines) when x₂ = y₂.
MidpointResult h2_method_I(const Point2d& x, const Point2d& y, const Toleranced& tol = {});
/// v = L(x,x_*) ∩ L(y,y_*), z on the vertical through v.
MidpointResult h2_method_II(const Point2d& x, const Point2d& y, const Toleranced& tol = {});
/// Circle through x, y orthogonal to the carrier; z below its center.
MidpointResult h2_method_III(const Point2d& x, const Point2d& y, const Toleranced& tol = {});
/// z₁ = L(x,ȳ) ∩ L(x̄,y), z on the vertical through z₁.
MidpointResult h2_method_IV(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

// --- Disk -------------------------------------------------------------------

/// 0, x, y collinear. Works on the diameter directly, no rotation needed.
MidpointResult b2_case1(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

struct BisectorCircle {
  Point2d w;
  double r_w;

  Circle2d circle() const { return Circle2d(w, r_w); }
};

/// w = (y(1−|x|²) − x(1−|y|²)) / (|y|² − |x|²),
/// r_w = |x−y| √((1−|x|²)(1−|y|²)) / ||y|² − |x|²|.
BisectorCircle bisector_circle(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

/// u = (y(1−|x|²) + x(1−|y|²)) / (1 − |x|²|y|²).
Point2d inversion_chord_point(const Point2d& x, const Point2d& y);

MidpointResult b2_method_I(const Point2d& x, const Point2d& y, const Toleranced& tol = {});
/// which ∈ {II, III, IV, V, VI}: g ∈ {u, v, s, t, k}, z = L(0,g) ∩ S¹(a,r_a) ∩ B².
MidpointResult b2_methods_II_to_VI(const Point2d& x, const Point2d& y, MethodId which,
                                   const Toleranced& tol = {});
/// |x| = |y|: z = L(0,a) ∩ S¹(a,r_a) ∩ B².
MidpointResult b2_equal_moduli(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

/// Dispatch. Auto: vertical H² pair → case1, other H² → III; disk diameter →
/// case1, equal moduli → equal, otherwise I. `Angles` uses the closed forms.
MidpointResult midpoint(Model model, const Point2d& x, const Point2d& y,
                        MethodId method = MethodId::Auto, const Toleranced& tol = {});

/// The method Auto would pick for this input.
MethodId auto_method(Model model, const Point2d& x, const Point2d& y, const Toleranced& tol = {});

// --- Diagnostics ------------------------------------------------------------

enum class ClaimStatus { Pass, Fail, ConditionNotMet };

std::string_view to_string(ClaimStatus status);

struct Claim {
  std::string name;
  double residual = 0.0;
  ClaimStatus status = ClaimStatus::Pass;
};

struct DiagnosticsReport {
  std::string title;
  std::vector<Claim> claims;

  /// Records |residual| against `threshold`.
  void add(std::string name, double residual, double threshold);
  void skip(std::string name);

  const Claim* find(std::string_view name) const;
  /// No claim failed (ConditionNotMet is not a failure).
  bool all_pass() const;
  /// Largest |residual| over evaluated claims.
  double max_residual() const;
};

/// Maps an H² pair on an arbitrary semicircular carrier onto the unit
/// carrier by translating the center to 0 and scaling by 1/r.
std::pair<Point2d, Point2d> normalize_to_unit_carrier(const Point2d& x, const Point2d& y,
                                                      const Toleranced& tol = {});

/// x, y on S¹ ∩ H², distinct. Tangency, vertical alignments, the angle
/// equality, the unit-carrier bisector circle claims and the orthocenter claim.
DiagnosticsReport lemma31_report(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

/// Disk pair with |x| ≠ |y|, 0, x, y noncollinear.
DiagnosticsReport lemma46_report(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

/// True when the arc x^*, x, y, y^* of S¹(a,r_a) is a semicircle.
bool inversion_arc_is_semicircle(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

DiagnosticsReport prop47_report(const Point2d& x, const Point2d& y, const Toleranced& tol = {});

struct OrthogonalityCriterion {
  bool orthogonal;               // S¹(x^*, t_x) ⊥ S¹(y^*, t_y) within tolerance
  bool criterion_holds;          // cos∠x0y = |x||y| within tolerance
  double orthogonality_residual; // signed, (d² − t_x² − t_y²) · |x||y| / 2
  double criterion_residual;     // signed, cos∠x0y − |x||y|
};

OrthogonalityCriterion prop48_orthogonality(const Point2d& x, const Point2d& y,
                                            const Toleranced& tol = {});

// --- Scale sequence -----------------------------------------------------------

struct PointChain {
  Point2d base;
  std::vector<Point2d> points;  // X_1 .. X_n
  double c;                     // ρ(0, X_1)
  ConstructionTrace trace;
};

/// X_{k+1} is the foot on L(0,X_1) of the second intersection of
/// L(M_{k−1}, X_k) with S¹. Throws ChainSaturated once 1 − |X_k| < 1e−12.
PointChain scale_sequence(const Point2d& x1, int n, const Toleranced& tol = {});

inline constexpr double kChainSaturation = 1e-12;

}  // namespace hypmid
