#pragma once

// Ruler-and-compass construction traces. A `Construction` executes each
// primitive through geom2d and records it, so a trace can be replayed,
// rendered, or emitted as a script.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hypmid/geom2d.hpp"
#include "hypmid/hypmetric.hpp"

namespace hypmid {

using GeomObject = std::variant<Point2d, Line2d, Circle2d>;

enum class StepKind {
  Line,                 // L(p, q)
  Perpendicular,        // line through p orthogonal to l
  CircleCenterThrough,  // compass: S¹(c, |p − c|)
  CircleDiameter,       // S¹((p+q)/2, |p−q|/2)
  CircleThrough,        // circle through three points
  Center,               // center of a drawn circle
  Midpoint,             // Euclidean midpoint of [p, q]
  IntersectLL,
  IntersectLC,
  IntersectCC,
  Reflect,              // reflection of p in a line
  Invert,               // inversion of p in a circle
  ClosedForm,           // value taken from a formula rather than drawn
};

std::string_view to_string(StepKind kind);

enum class MethodId { Auto, Case1, EqualModuli, I, II, III, IV, V, VI, Angles };

std::string_view to_string(MethodId id);
/// "auto", "case1", "equal", "I".."VI", "angles" (roman numerals are case-insensitive).
MethodId parse_method(std::string_view text);

/// Script keyword of a selector kind: upper, in_disk, closer, ...
std::string_view selector_keyword(Selectord::Kind kind);

/// A selector together with the labels of the points it refers to.
struct SelectorSpec {
  Selectord selector;
  std::string p_label;
  std::string q_label;
};

struct ConstructionStep {
  StepKind kind;
  std::vector<std::string> inputs;
  std::optional<SelectorSpec> selector;
  std::string label;
  GeomObject object;
};

struct ConstructionTrace {
  Model model = Model::Disk;
  MethodId method = MethodId::Auto;
  std::vector<std::pair<std::string, Point2d>> initial;
  std::vector<ConstructionStep> steps;
  std::string result_label;
  Point2d result = Point2d::Zero();
};

/// Labels that exist before any step: the origin, the real axis and the unit circle.
inline constexpr const char* kOrigin = "origin";
inline constexpr const char* kRealAxis = "real_axis";
inline constexpr const char* kUnitCircle = "unit";

bool is_builtin_label(std::string_view label);

class Construction {
 public:
  explicit Construction(Model model, const Toleranced& tol = {});

  const Point2d& given(const std::string& label, const Point2d& p);

  Line2d line(const std::string& label, const std::string& p, const std::string& q);
  Line2d perpendicular(const std::string& label, const std::string& l, const std::string& through);
  Circle2d circle_center_through(const std::string& label, const std::string& center,
                                 const std::string& p);
  Circle2d circle_diameter(const std::string& label, const std::string& p, const std::string& q);
  Circle2d circle_through(const std::string& label, const std::string& p, const std::string& q,
                          const std::string& r);
  Point2d center(const std::string& label, const std::string& circle);
  Point2d midpoint(const std::string& label, const std::string& p, const std::string& q);
  Point2d intersect(const std::string& label, const std::string& a, const std::string& b,
                    const SelectorSpec& sel);
  Point2d reflect(const std::string& label, const std::string& p, const std::string& line);
  Point2d invert(const std::string& label, const std::string& p, const std::string& circle);
  Point2d closed_form(const std::string& label, const Point2d& value,
                      std::vector<std::string> inputs);

  // Selector helpers that resolve point labels now.
  SelectorSpec unique() const { return {Selectord::unique(), {}, {}}; }
  SelectorSpec upper() const { return {Selectord::upper(), {}, {}}; }
  SelectorSpec lower() const { return {Selectord::lower(), {}, {}}; }
  SelectorSpec in_disk() const { return {Selectord::inside_unit_disk(), {}, {}}; }
  SelectorSpec out_disk() const { return {Selectord::outside_unit_disk(), {}, {}}; }
  SelectorSpec on_real_axis() const { return {Selectord::on_real_axis(), {}, {}}; }
  SelectorSpec nearest(const std::string& p) const;
  SelectorSpec closer_to(const std::string& p, const std::string& than) const;
  SelectorSpec left_of(const std::string& a, const std::string& b) const;
  SelectorSpec right_of(const std::string& a, const std::string& b) const;

  const Point2d& point(const std::string& label) const;
  const Line2d& line_obj(const std::string& label) const;
  const Circle2d& circle_obj(const std::string& label) const;
  const GeomObject& object(const std::string& label) const;
  bool has(const std::string& label) const { return objects_.count(label) != 0; }

  const Toleranced& tolerance() const { return tol_; }
  Model model() const { return model_; }

  ConstructionTrace finish(const std::string& result_label, MethodId method) const;

 private:
  void record(StepKind kind, std::vector<std::string> inputs, std::optional<SelectorSpec> sel,
              const std::string& label, GeomObject obj);
  Carrier2d carrier(const std::string& label) const;

  Model model_;
  Toleranced tol_;
  std::map<std::string, GeomObject> objects_;
  std::vector<std::pair<std::string, Point2d>> initial_;
  std::vector<ConstructionStep> steps_;
};

/// Re-executes every step of `trace` from its initial points and returns the
/// point labelled `trace.result_label`.
Point2d replay(const ConstructionTrace& trace, const Toleranced& tol = {});

}  // namespace hypmid
