#include <algorithm>
#include <cmath>
#include <set>

#include "internal.hpp"

namespace hypmid::script {

ValueKind kind_of(const Value& v) {
  if (std::holds_alternative<Point2d>(v)) return ValueKind::Point;
  if (std::holds_alternative<Line2d>(v)) return ValueKind::Line;
  return ValueKind::Circle;
}

RuntimeGeometryError::RuntimeGeometryError(SourceLoc loc, ErrorKind kind, const std::string& message)
    : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + message),
      loc_(loc),
      kind_(kind) {}

bool EvaluationResult::all_passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const auto& a) { return a.passed; });
}

const Value* EvaluationResult::find(const std::string& name) const {
  for (const auto& [n, v] : bindings) {
    if (n == name) return &v;
  }
  return nullptr;
}

namespace {

// An evaluated argument. Only one of the members is meaningful, per `kind`.
struct Arg {
  ValueKind kind = ValueKind::Number;
  Value value = Point2d::Zero().eval();
  double number = 0.0;
  Model model = Model::Disk;

  const Point2d& point() const { return std::get<Point2d>(value); }
  const Line2d& line() const { return std::get<Line2d>(value); }
  const Circle2d& circle() const { return std::get<Circle2d>(value); }
  Carrier2d carrier() const {
    if (kind == ValueKind::Line) return line();
    return circle();
  }
};

class Evaluator {
 public:
  Evaluator(const Toleranced& tol) : tol_(tol) {
    env_.emplace(kOrigin, Point2d::Zero().eval());
    env_.emplace(kRealAxis, real_axis<double>());
    env_.emplace(kUnitCircle, Circle2d::unit());
  }

  void bind(const std::string& name, Value v) { env_.insert_or_assign(name, std::move(v)); }
  const Value& get(const std::string& name) const { return env_.at(name); }

  Arg eval(const Expr& e, const std::optional<SelectorExpr>& sel = std::nullopt) {
    Arg out;
    switch (e.kind) {
      case Expr::Kind::PointLiteral:
        out.kind = ValueKind::Point;
        out.value = Point2d(e.x, e.y);
        return out;
      case Expr::Kind::Number:
        out.kind = ValueKind::Number;
        out.number = e.x;
        return out;
      case Expr::Kind::Name:
        if (detail::is_model_tag(e.name)) {
          out.kind = ValueKind::Model;
          out.model = parse_model(e.name);
          return out;
        }
        out.value = env_.at(e.name);
        out.kind = kind_of(out.value);
        return out;
      case Expr::Kind::Call:
        break;
    }
    std::vector<Arg> a;
    for (const auto& arg : e.args) a.push_back(eval(arg));
    out.value = call(e, a, sel);
    out.kind = kind_of(out.value);
    return out;
  }

  AssertionResult check(const Statement& s) {
    std::vector<Arg> a;
    for (const auto& arg : s.args) a.push_back(eval(arg));
    double residual = 0.0;
    const std::string& k = s.name;
    if (k == "on") {
      residual = is_on(a[0].point(), a[1].carrier(), tol_).residual;
    } else if (k == "orthogonal") {
      residual = orthogonality(a[0].carrier(), a[1].carrier());
    } else if (k == "tangent") {
      residual = line_tangent_to_circle(a[0].line(), a[1].circle(), tol_).residual;
    } else if (k == "collinear") {
      residual = collinear(a[0].point(), a[1].point(), a[2].point(), tol_).residual;
    } else if (k == "equal_rho") {
      const double r1 = rho(a[0].model, a[1].point(), a[2].point());
      const double r2 = rho(a[0].model, a[3].point(), a[4].point());
      residual = (r1 - r2) / std::max({1.0, r1, r2});
    } else if (k == "equals") {
      residual = (a[0].point() - a[1].point()).norm() / magnitude_scale(a[0].point());
    }
    AssertionResult r;
    r.loc = s.loc;
    r.text = detail::format_assertion(s);
    r.residual = std::abs(residual);
    r.tolerance = s.tol.value_or(tol_.eps_incidence);
    r.passed = std::isfinite(residual) && r.residual <= r.tolerance;
    return r;
  }

 private:
  // Lines are orthogonal to circles through their center, and to each other
  // when their normals are perpendicular.
  double orthogonality(const Carrier2d& a, const Carrier2d& b) const {
    const auto* la = std::get_if<Line2d>(&a);
    const auto* lb = std::get_if<Line2d>(&b);
    if (la && lb) return la->normal().dot(lb->normal());
    if (la) return is_on(std::get<Circle2d>(b).center(), *la, tol_).residual;
    if (lb) return is_on(std::get<Circle2d>(a).center(), *lb, tol_).residual;
    return circles_orthogonal(std::get<Circle2d>(a), std::get<Circle2d>(b), tol_).residual;
  }

  Point2d selector_point(const std::string& name) const { return std::get<Point2d>(env_.at(name)); }

  Selectord selector(const SelectorExpr& s) const {
    const auto& w = s.keyword;
    if (w == "upper") return Selectord::upper();
    if (w == "lower") return Selectord::lower();
    if (w == "in_disk") return Selectord::inside_unit_disk();
    if (w == "out_disk") return Selectord::outside_unit_disk();
    if (w == "boundary") return Selectord::on_real_axis();
    if (w == "unique") return Selectord::unique();
    if (w == "nearest") return Selectord::nearest_to(selector_point(s.names[0]));
    if (w == "closer") return Selectord::closer_to(selector_point(s.names[0]), selector_point(s.names[1]));
    if (w == "left") return Selectord::left_of(selector_point(s.names[0]), selector_point(s.names[1]));
    return Selectord::right_of(selector_point(s.names[0]), selector_point(s.names[1]));
  }

  Value call(const Expr& e, const std::vector<Arg>& a, const std::optional<SelectorExpr>& sel) const {
    const std::string& f = e.name;
    if (f == "line") return line_through(a[0].point(), a[1].point(), tol_);
    if (f == "perp") return perpendicular_through(a[0].line(), a[1].point());
    if (f == "circle") {
      if (a[1].kind == ValueKind::Number) return Circle2d(a[0].point(), a[1].number);
      return circle_center_through(a[0].point(), a[1].point(), tol_);
    }
    if (f == "circle_through") return circle_through(a[0].point(), a[1].point(), a[2].point(), tol_);
    if (f == "circle_diameter") return circle_on_diameter(a[0].point(), a[1].point(), tol_);
    if (f == "ortho_circle") return ortho_circle(a[0].point(), a[1].point(), tol_).circle();
    if (f == "bisector_circle") return bisector_circle(a[0].point(), a[1].point(), tol_).circle();
    if (f == "geodesic") {
      const Carrier2d c = geodesic_of(a[0].model, a[1].point(), a[2].point(), tol_).carrier;
      return std::visit([](const auto& v) -> Value { return v; }, c);
    }
    if (f == "intersect") return intersect(a[0].carrier(), a[1].carrier(), selector(*sel), tol_);
    if (f == "invert") {
      if (a.size() == 1) return invert_unit(a[0].point(), tol_);
      return invert_in_circle(a[0].point(), a[1].circle(), tol_);
    }
    if (f == "reflect_real") return reflect_real(a[0].point());
    if (f == "reflect") return reflect_in_line(a[0].point(), a[1].line());
    if (f == "center") return a[0].circle().center();
    if (f == "midpoint") return euclidean_midpoint(a[0].point(), a[1].point());
    if (f == "midpoint_oracle") return midpoint_oracle(a[0].model, a[1].point(), a[2].point(), tol_);
    throw std::logic_error("unresolved function " + f);
  }

  Toleranced tol_;
  std::map<std::string, Value> env_;
};

}  // namespace

EvaluationResult evaluate(const Program& program, const Toleranced& tol, const Bindings& inputs) {
  std::set<std::string> declared;
  for (const auto& s : program.statements) {
    if (s.kind == Statement::Kind::Input) declared.insert(s.name);
  }
  for (const auto& [name, p] : inputs) {
    if (!declared.count(name)) {
      throw ParseError(ParseErrorKind::UnknownName, {}, name, {}, "no input named '" + name + "'");
    }
  }

  Evaluator ev(tol);
  EvaluationResult result;
  for (const auto& s : program.statements) {
    try {
      switch (s.kind) {
        case Statement::Kind::Input: {
          Point2d p;
          if (auto it = inputs.find(s.name); it != inputs.end()) {
            p = it->second;
          } else if (s.expr) {
            p = Point2d(s.expr->x, s.expr->y);
          } else {
            throw ParseError(ParseErrorKind::UnknownName, s.loc, s.name, {},
                             "input '" + s.name + "' has no default and was not bound");
          }
          ev.bind(s.name, p);
          result.bindings.emplace_back(s.name, p);
          break;
        }
        case Statement::Kind::Binding: {
          Value v = ev.eval(*s.expr, s.selector).value;
          ev.bind(s.name, v);
          result.bindings.emplace_back(s.name, std::move(v));
          break;
        }
        case Statement::Kind::Assert:
          result.assertions.push_back(ev.check(s));
          break;
        case Statement::Kind::Output:
          result.outputs.emplace_back(s.name, ev.get(s.name));
          break;
      }
    } catch (const GeometryError& e) {
      throw RuntimeGeometryError(s.loc, e.kind(), e.what());
    }
  }
  return result;
}

}  // namespace hypmid::script
