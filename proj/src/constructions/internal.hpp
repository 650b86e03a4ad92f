#pragma once

#include <string>

#include "hypmid/constructions.hpp"

namespace hypmid::detail {

/// Residuals and oracle cross-check for a finished construction.
MidpointResult finish_midpoint(const Construction& c, const Point2d& x, const Point2d& y,
                               MethodId method, const Toleranced& tol);

/// Runs `body`; a ParallelLines failure means this method cannot reach its
/// auxiliary point and is reported as MethodInapplicable.
template <typename F>
MidpointResult as_method(const char* name, F&& body) {
  try {
    return body();
  } catch (const MethodInapplicable&) {
    throw;
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::ParallelLines) {
      throw MethodInapplicable(ErrorKind::ParallelLines,
                               std::string("method ") + name + " needs an intersection of parallel lines");
    }
    throw;
  }
}

void require_distinct(const Point2d& x, const Point2d& y, const Toleranced& tol);

}  // namespace hypmid::detail
