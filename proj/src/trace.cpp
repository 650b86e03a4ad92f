#include "hypmid/trace.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hypmid {

std::string_view to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Line: return "Line";
    case StepKind::Perpendicular: return "Perpendicular";
    case StepKind::CircleCenterThrough: return "CircleCenterThrough";
    case StepKind::CircleDiameter: return "CircleDiameter";
    case StepKind::CircleThrough: return "CircleThrough";
    case StepKind::Center: return "Center";
    case StepKind::Midpoint: return "Midpoint";
    case StepKind::IntersectLL: return "IntersectLL";
    case StepKind::IntersectLC: return "IntersectLC";
    case StepKind::IntersectCC: return "IntersectCC";
    case StepKind::Reflect: return "Reflect";
    case StepKind::Invert: return "Invert";
    case StepKind::ClosedForm: return "ClosedForm";
  }
  return "Unknown";
}

std::string_view to_string(MethodId id) {
  switch (id) {
    case MethodId::Auto: return "auto";
    case MethodId::Case1: return "case1";
    case MethodId::EqualModuli: return "equal";
    case MethodId::I: return "I";
    case MethodId::II: return "II";
    case MethodId::III: return "III";
    case MethodId::IV: return "IV";
    case MethodId::V: return "V";
    case MethodId::VI: return "VI";
    case MethodId::Angles: return "angles";
  }
  return "auto";
}

MethodId parse_method(std::string_view text) {
  std::string t(text);
  std::string upper = t;
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "AUTO") return MethodId::Auto;
  if (upper == "CASE1") return MethodId::Case1;
  if (upper == "EQUAL" || upper == "EQUAL_MODULI") return MethodId::EqualModuli;
  if (upper == "ANGLES") return MethodId::Angles;
  if (upper == "I") return MethodId::I;
  if (upper == "II") return MethodId::II;
  if (upper == "III") return MethodId::III;
  if (upper == "IV") return MethodId::IV;
  if (upper == "V") return MethodId::V;
  if (upper == "VI") return MethodId::VI;
  throw std::invalid_argument("unknown method '" + t + "'");
}

std::string_view selector_keyword(Selectord::Kind kind) {
  using K = Selectord::Kind;
  switch (kind) {
    case K::Unique: return "unique";
    case K::UpperHalfPlane: return "upper";
    case K::LowerHalfPlane: return "lower";
    case K::InsideUnitDisk: return "in_disk";
    case K::OutsideUnitDisk: return "out_disk";
    case K::OnRealAxis: return "boundary";
    case K::NearestTo: return "nearest";
    case K::CloserTo: return "closer";
    case K::LeftOf: return "left";
    case K::RightOf: return "right";
  }
  return "unique";
}

bool is_builtin_label(std::string_view label) {
  return label == kOrigin || label == kRealAxis || label == kUnitCircle;
}

Construction::Construction(Model model, const Toleranced& tol) : model_(model), tol_(tol) {
  objects_.emplace(kOrigin, Point2d::Zero());
  objects_.emplace(kRealAxis, real_axis<double>());
  objects_.emplace(kUnitCircle, Circle2d::unit());
}

const Point2d& Construction::given(const std::string& label, const Point2d& p) {
  if (has(label)) throw std::invalid_argument("label '" + label + "' already defined");
  objects_.emplace(label, p);
  initial_.emplace_back(label, p);
  return point(label);
}

void Construction::record(StepKind kind, std::vector<std::string> inputs,
                          std::optional<SelectorSpec> sel, const std::string& label, GeomObject obj) {
  if (has(label)) throw std::invalid_argument("label '" + label + "' already defined");
  objects_.emplace(label, obj);
  steps_.push_back({kind, std::move(inputs), std::move(sel), label, std::move(obj)});
}

const GeomObject& Construction::object(const std::string& label) const {
  auto it = objects_.find(label);
  if (it == objects_.end()) throw std::invalid_argument("unknown label '" + label + "'");
  return it->second;
}

const Point2d& Construction::point(const std::string& label) const {
  const auto* p = std::get_if<Point2d>(&object(label));
  if (!p) throw std::invalid_argument("'" + label + "' is not a point");
  return *p;
}

const Line2d& Construction::line_obj(const std::string& label) const {
  const auto* l = std::get_if<Line2d>(&object(label));
  if (!l) throw std::invalid_argument("'" + label + "' is not a line");
  return *l;
}

const Circle2d& Construction::circle_obj(const std::string& label) const {
  const auto* c = std::get_if<Circle2d>(&object(label));
  if (!c) throw std::invalid_argument("'" + label + "' is not a circle");
  return *c;
}

Carrier2d Construction::carrier(const std::string& label) const {
  const GeomObject& obj = object(label);
  if (const auto* l = std::get_if<Line2d>(&obj)) return *l;
  if (const auto* c = std::get_if<Circle2d>(&obj)) return *c;
  throw std::invalid_argument("'" + label + "' is not a line or circle");
}

Line2d Construction::line(const std::string& label, const std::string& p, const std::string& q) {
  const Line2d l = line_through(point(p), point(q), tol_);
  record(StepKind::Line, {p, q}, std::nullopt, label, l);
  return l;
}

Line2d Construction::perpendicular(const std::string& label, const std::string& l,
                                   const std::string& through) {
  const Line2d result = perpendicular_through(line_obj(l), point(through));
  record(StepKind::Perpendicular, {l, through}, std::nullopt, label, result);
  return result;
}

Circle2d Construction::circle_center_through(const std::string& label, const std::string& center,
                                             const std::string& p) {
  const Circle2d c = hypmid::circle_center_through(point(center), point(p), tol_);
  record(StepKind::CircleCenterThrough, {center, p}, std::nullopt, label, c);
  return c;
}

Circle2d Construction::circle_diameter(const std::string& label, const std::string& p,
                                       const std::string& q) {
  const Circle2d c = circle_on_diameter(point(p), point(q), tol_);
  record(StepKind::CircleDiameter, {p, q}, std::nullopt, label, c);
  return c;
}

Circle2d Construction::circle_through(const std::string& label, const std::string& p,
                                      const std::string& q, const std::string& r) {
  const Circle2d c = hypmid::circle_through(point(p), point(q), point(r), tol_);
  record(StepKind::CircleThrough, {p, q, r}, std::nullopt, label, c);
  return c;
}

Point2d Construction::center(const std::string& label, const std::string& circle) {
  const Point2d c = circle_obj(circle).center();
  record(StepKind::Center, {circle}, std::nullopt, label, c);
  return c;
}

Point2d Construction::midpoint(const std::string& label, const std::string& p, const std::string& q) {
  const Point2d m = euclidean_midpoint(point(p), point(q));
  record(StepKind::Midpoint, {p, q}, std::nullopt, label, m);
  return m;
}

Point2d Construction::intersect(const std::string& label, const std::string& a, const std::string& b,
                                const SelectorSpec& sel) {
  const Carrier2d ca = carrier(a);
  const Carrier2d cb = carrier(b);
  const bool la = std::holds_alternative<Line2d>(ca);
  const bool lb = std::holds_alternative<Line2d>(cb);
  const StepKind kind = la && lb ? StepKind::IntersectLL
                        : (la || lb) ? StepKind::IntersectLC
                                     : StepKind::IntersectCC;
  const Point2d p = hypmid::intersect(ca, cb, sel.selector, tol_);
  record(kind, {a, b}, sel, label, p);
  return p;
}

Point2d Construction::reflect(const std::string& label, const std::string& p, const std::string& line) {
  const Point2d r = reflect_in_line(point(p), line_obj(line));
  record(StepKind::Reflect, {p, line}, std::nullopt, label, r);
  return r;
}

Point2d Construction::invert(const std::string& label, const std::string& p, const std::string& circle) {
  const Point2d r = invert_in_circle(point(p), circle_obj(circle), tol_);
  record(StepKind::Invert, {p, circle}, std::nullopt, label, r);
  return r;
}

Point2d Construction::closed_form(const std::string& label, const Point2d& value,
                                  std::vector<std::string> inputs) {
  record(StepKind::ClosedForm, std::move(inputs), std::nullopt, label, value);
  return value;
}

SelectorSpec Construction::nearest(const std::string& p) const {
  return {Selectord::nearest_to(point(p)), p, {}};
}

SelectorSpec Construction::closer_to(const std::string& p, const std::string& than) const {
  return {Selectord::closer_to(point(p), point(than)), p, than};
}

SelectorSpec Construction::left_of(const std::string& a, const std::string& b) const {
  return {Selectord::left_of(point(a), point(b)), a, b};
}

SelectorSpec Construction::right_of(const std::string& a, const std::string& b) const {
  return {Selectord::right_of(point(a), point(b)), a, b};
}

ConstructionTrace Construction::finish(const std::string& result_label, MethodId method) const {
  ConstructionTrace t;
  t.model = model_;
  t.method = method;
  t.initial = initial_;
  t.steps = steps_;
  t.result_label = result_label;
  t.result = point(result_label);
  return t;
}

Point2d replay(const ConstructionTrace& trace, const Toleranced& tol) {
  Construction c(trace.model, tol);
  for (const auto& [label, p] : trace.initial) c.given(label, p);
  for (const auto& s : trace.steps) {
    const auto& in = s.inputs;
    switch (s.kind) {
      case StepKind::Line: c.line(s.label, in.at(0), in.at(1)); break;
      case StepKind::Perpendicular: c.perpendicular(s.label, in.at(0), in.at(1)); break;
      case StepKind::CircleCenterThrough: c.circle_center_through(s.label, in.at(0), in.at(1)); break;
      case StepKind::CircleDiameter: c.circle_diameter(s.label, in.at(0), in.at(1)); break;
      case StepKind::CircleThrough: c.circle_through(s.label, in.at(0), in.at(1), in.at(2)); break;
      case StepKind::Center: c.center(s.label, in.at(0)); break;
      case StepKind::Midpoint: c.midpoint(s.label, in.at(0), in.at(1)); break;
      case StepKind::IntersectLL:
      case StepKind::IntersectLC:
      case StepKind::IntersectCC: c.intersect(s.label, in.at(0), in.at(1), s.selector.value()); break;
      case StepKind::Reflect: c.reflect(s.label, in.at(0), in.at(1)); break;
      case StepKind::Invert: c.invert(s.label, in.at(0), in.at(1)); break;
      case StepKind::ClosedForm: c.closed_form(s.label, std::get<Point2d>(s.object), in); break;
    }
  }
  return c.point(trace.result_label);
}

}  // namespace hypmid
