#include "internal.hpp"

namespace hypmid::script {

namespace {

Expr name(const std::string& n, bool through = false) {
  Expr e;
  e.kind = Expr::Kind::Name;
  e.name = n;
  e.through = through;
  return e;
}

Expr literal(const Point2d& p) {
  Expr e;
  e.kind = Expr::Kind::PointLiteral;
  e.x = p.x();
  e.y = p.y();
  return e;
}

Expr call(const std::string& f, std::vector<Expr> args) {
  Expr e;
  e.kind = Expr::Kind::Call;
  e.name = f;
  e.args = std::move(args);
  return e;
}

Statement binding(const std::string& type, const std::string& label, Expr e) {
  Statement s;
  s.kind = Statement::Kind::Binding;
  s.declared_type = type;
  s.name = label;
  s.expr = std::move(e);
  return s;
}

SelectorExpr selector(const SelectorSpec& spec) {
  SelectorExpr out;
  out.keyword = std::string(selector_keyword(spec.selector.kind));
  if (!spec.p_label.empty()) out.names.push_back(spec.p_label);
  if (!spec.q_label.empty()) out.names.push_back(spec.q_label);
  return out;
}

Statement step_statement(const ConstructionStep& step) {
  const auto& in = step.inputs;
  switch (step.kind) {
    case StepKind::Line: return binding("line", step.label, call("line", {name(in[0]), name(in[1])}));
    case StepKind::Perpendicular:
      return binding("line", step.label, call("perp", {name(in[0]), name(in[1], true)}));
    case StepKind::CircleCenterThrough:
      return binding("circle", step.label, call("circle", {name(in[0]), name(in[1], true)}));
    case StepKind::CircleDiameter:
      return binding("circle", step.label, call("circle_diameter", {name(in[0]), name(in[1])}));
    case StepKind::CircleThrough:
      return binding("circle", step.label, call("circle_through", {name(in[0]), name(in[1]), name(in[2])}));
    case StepKind::Center: return binding("point", step.label, call("center", {name(in[0])}));
    case StepKind::Midpoint: return binding("point", step.label, call("midpoint", {name(in[0]), name(in[1])}));
    case StepKind::IntersectLL:
    case StepKind::IntersectLC:
    case StepKind::IntersectCC: {
      Statement s = binding("point", step.label, call("intersect", {name(in[0]), name(in[1])}));
      s.selector = selector(*step.selector);
      return s;
    }
    case StepKind::Reflect:
      if (in[1] == kRealAxis) return binding("point", step.label, call("reflect_real", {name(in[0])}));
      return binding("point", step.label, call("reflect", {name(in[0]), name(in[1])}));
    case StepKind::Invert:
      if (in[1] == kUnitCircle) return binding("point", step.label, call("invert", {name(in[0])}));
      return binding("point", step.label, call("invert", {name(in[0]), name(in[1])}));
    case StepKind::ClosedForm: {
      Statement s = binding("point", step.label, literal(std::get<Point2d>(step.object)));
      s.trailing_comment = " closed form";
      return s;
    }
  }
  throw std::logic_error("unknown step kind");
}

}  // namespace

Program emit(const ConstructionTrace& trace) {
  Program p;
  const std::string model(to_string(trace.model));
  for (const auto& [label, point] : trace.initial) {
    Statement s;
    s.kind = Statement::Kind::Input;
    s.name = label;
    s.expr = literal(point);
    p.statements.push_back(std::move(s));
  }
  if (!p.statements.empty()) {
    p.statements.front().comments = {" " + model + " construction, method " + std::string(to_string(trace.method))};
  }
  bool first_step = true;
  for (const auto& step : trace.steps) {
    Statement s = step_statement(step);
    s.blank_before = first_step;
    first_step = false;
    p.statements.push_back(std::move(s));
  }

  Statement out;
  out.kind = Statement::Kind::Output;
  out.name = trace.result_label;
  out.blank_before = true;
  p.statements.push_back(out);

  if (trace.initial.size() >= 2) {
    const std::string& x = trace.initial[0].first;
    const std::string& y = trace.initial[1].first;
    const std::string& z = trace.result_label;
    Statement eq;
    eq.kind = Statement::Kind::Assert;
    eq.name = "equals";
    eq.args = {name(z), call("midpoint_oracle", {name(model), name(x), name(y)})};
    eq.tol = kOracleFlag;
    p.statements.push_back(eq);

    Statement er;
    er.kind = Statement::Kind::Assert;
    er.name = "equal_rho";
    er.args = {name(model), name(x), name(z), name(z), name(y)};
    p.statements.push_back(er);
  }
  return p;
}

}  // namespace hypmid::script
