#pragma once

// The .hgc construction language. One statement per line:
//
//   # comment
//   input x = (0.5, 0)                   point supplied by the caller, with default
//   circle S_a = circle_through(x, y, xs)
//   z = intersect(S_w, S_a) select in_disk
//   assert on(z, S_a) tol 1e-9
//   output z
//
// Names are single-assignment and must be bound before use. Argument kinds
// and arities are checked by the parser; geometry failures surface from the
// evaluator with the statement location. The grammar is in docs/hgc.ebnf.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hypmid/constructions.hpp"
#include "hypmid/geom2d.hpp"
#include "hypmid/trace.hpp"

namespace hypmid::script {

struct SourceLoc {
  int line = 0;
  int column = 0;
};

enum class ValueKind { Point, Line, Circle, Carrier, Number, Model };

std::string_view to_string(ValueKind kind);

struct Expr {
  enum class Kind { PointLiteral, Number, Name, Call };

  Kind kind = Kind::Name;
  SourceLoc loc;
  double x = 0.0;            // number value, or first literal coordinate
  double y = 0.0;            // second literal coordinate
  std::string name;          // identifier or function name
  bool through = false;      // argument written as `through NAME`
  std::vector<Expr> args;

  friend bool operator==(const Expr& a, const Expr& b);
};

struct SelectorExpr {
  std::string keyword;              // upper, lower, in_disk, out_disk, boundary, unique, nearest, closer, left, right
  std::vector<std::string> names;   // point arguments of nearest / closer / left / right
  SourceLoc loc;

  friend bool operator==(const SelectorExpr& a, const SelectorExpr& b);
};

struct Statement {
  enum class Kind { Input, Binding, Assert, Output };

  Kind kind = Kind::Binding;
  SourceLoc loc;
  std::string name;                     // bound name, output name, or assertion kind
  std::string declared_type;            // "point", "line", "circle", "carrier" or empty
  std::optional<Expr> expr;             // binding / input default
  std::optional<SelectorExpr> selector; // intersect bindings
  std::vector<Expr> args;               // assertion arguments
  std::optional<double> tol;            // assertion override
  std::vector<std::string> comments;    // full-line comments above the statement
  std::string trailing_comment;         // comment after the statement on the same line
  bool blank_before = false;            // source had a blank line above

  friend bool operator==(const Statement& a, const Statement& b);
};

struct Program {
  std::vector<Statement> statements;
  std::vector<std::string> trailing_comments;  // comments after the last statement

  /// Structural equality: ignores source positions.
  friend bool operator==(const Program& a, const Program& b);
};

enum class ParseErrorKind { Syntax, DuplicateName, UnknownName, Arity, KindMismatch };

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, SourceLoc loc, std::string token, std::vector<std::string> expected,
             const std::string& message);

  ParseErrorKind kind() const noexcept { return kind_; }
  SourceLoc loc() const noexcept { return loc_; }
  const std::string& token() const noexcept { return token_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  ParseErrorKind kind_;
  SourceLoc loc_;
  std::string token_;
  std::vector<std::string> expected_;
};

/// Parses and resolves names and kinds. Throws ParseError.
Program parse(std::string_view source);

/// Canonical text. parse(format(p)) == p.
std::string format(const Program& program);

using Value = std::variant<Point2d, Line2d, Circle2d>;

ValueKind kind_of(const Value& v);

/// A geometry failure with the location of the statement that raised it.
class RuntimeGeometryError : public std::runtime_error {
 public:
  RuntimeGeometryError(SourceLoc loc, ErrorKind kind, const std::string& message);

  SourceLoc loc() const noexcept { return loc_; }
  ErrorKind kind() const noexcept { return kind_; }

 private:
  SourceLoc loc_;
  ErrorKind kind_;
};

struct AssertionResult {
  SourceLoc loc;
  std::string text;  // the assertion as formatted source
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct EvaluationResult {
  std::vector<std::pair<std::string, Value>> bindings;  // in statement order
  std::vector<AssertionResult> assertions;
  std::vector<std::pair<std::string, Value>> outputs;

  bool all_passed() const;
  const Value* find(const std::string& name) const;
};

/// Caller-supplied values for `input` statements.
using Bindings = std::map<std::string, Point2d>;

/// Runs the program. An `input` without a default must appear in `inputs`
/// (ParseError UnknownName otherwise). Assertions never stop evaluation.
EvaluationResult evaluate(const Program& program, const Toleranced& tol = {},
                          const Bindings& inputs = {});

/// Converts a construction trace into a runnable program that rebuilds the
/// same point and checks it against the oracle.
Program emit(const ConstructionTrace& trace);

/// Shortest decimal spelling that reads back to the same double.
std::string format_number(double value);

}  // namespace hypmid::script
