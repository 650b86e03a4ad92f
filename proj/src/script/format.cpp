#include <charconv>
#include <cmath>

#include "internal.hpp"

namespace hypmid::script {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

namespace detail {

std::string format_expr(const Expr& e) {
  std::string out = e.through ? "through " : "";
  switch (e.kind) {
    case Expr::Kind::PointLiteral:
      return out + "(" + format_number(e.x) + ", " + format_number(e.y) + ")";
    case Expr::Kind::Number:
      return out + format_number(e.x);
    case Expr::Kind::Name:
      return out + e.name;
    case Expr::Kind::Call:
      break;
  }
  out += e.name + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ", ";
    out += format_expr(e.args[i]);
  }
  return out + ")";
}

std::string format_assertion(const Statement& s) {
  std::string out = "assert " + s.name + "(";
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (i) out += ", ";
    out += format_expr(s.args[i]);
  }
  out += ")";
  if (s.tol) out += " tol " + format_number(*s.tol);
  return out;
}

}  // namespace detail

namespace {

std::string statement_text(const Statement& s) {
  switch (s.kind) {
    case Statement::Kind::Input:
      return "input " + s.name + (s.expr ? " = " + detail::format_expr(*s.expr) : "");
    case Statement::Kind::Output:
      return "output " + s.name;
    case Statement::Kind::Assert:
      return detail::format_assertion(s);
    case Statement::Kind::Binding:
      break;
  }
  std::string out;
  if (!s.declared_type.empty()) out += s.declared_type + " ";
  out += s.name + " = " + detail::format_expr(*s.expr);
  if (s.selector) {
    out += " select " + s.selector->keyword;
    for (const auto& n : s.selector->names) out += " " + n;
  }
  return out;
}

}  // namespace

std::string format(const Program& program) {
  std::string out;
  bool first = true;
  for (const auto& s : program.statements) {
    if (s.blank_before && !first) out += "\n";
    for (const auto& c : s.comments) out += "#" + c + "\n";
    out += statement_text(s);
    if (!s.trailing_comment.empty()) out += "  #" + s.trailing_comment;
    out += "\n";
    first = false;
  }
  for (const auto& c : program.trailing_comments) out += "#" + c + "\n";
  return out;
}

}  // namespace hypmid::script
