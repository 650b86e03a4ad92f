#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hypmid/script.hpp"

namespace hypmid::script::detail {

struct Param {
  ValueKind kind;
  bool through = false;
};

struct Signature {
  std::string_view name;
  std::vector<Param> params;
  ValueKind result;
};

/// All overloads of the expression functions.
const std::vector<Signature>& functions();
/// Assertion kinds; `result` is unused.
const std::vector<Signature>& assertions();

/// Whether an argument of kind `actual` may bind to a parameter of kind `expected`.
bool accepts(ValueKind expected, ValueKind actual);

bool is_selector_keyword(std::string_view word);
/// Number of point names the selector keyword takes.
int selector_arity(std::string_view word);

bool is_reserved(std::string_view word);
bool is_model_tag(std::string_view word);

std::string format_expr(const Expr& e);
std::string format_assertion(const Statement& s);

}  // namespace hypmid::script::detail
