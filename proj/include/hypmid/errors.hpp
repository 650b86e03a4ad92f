#pragma once

#include <stdexcept>
#include <string>

namespace hypmid {

enum class ErrorKind {
  DegenerateInput,
  ParallelLines,
  NoIntersection,
  AmbiguousSelection,
  ConcentricCircles,
  CollinearPoints,
  OriginInversion,
  CenterInversion,
  RepeatedPoint,
  OutsideDomain,
  BadAngleOrder,
  NotOnArc,
  NotOnUnitCircle,
  NotVerticallyAligned,
  NotOnDiameter,
  EqualModuli,
  CollinearWithOrigin,
  MethodInapplicable,
  ChainSaturated,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ParallelLines: return "ParallelLines";
    case ErrorKind::NoIntersection: return "NoIntersection";
    case ErrorKind::AmbiguousSelection: return "AmbiguousSelection";
    case ErrorKind::ConcentricCircles: return "ConcentricCircles";
    case ErrorKind::CollinearPoints: return "CollinearPoints";
    case ErrorKind::OriginInversion: return "OriginInversion";
    case ErrorKind::CenterInversion: return "CenterInversion";
    case ErrorKind::RepeatedPoint: return "RepeatedPoint";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::BadAngleOrder: return "BadAngleOrder";
    case ErrorKind::NotOnArc: return "NotOnArc";
    case ErrorKind::NotOnUnitCircle: return "NotOnUnitCircle";
    case ErrorKind::NotVerticallyAligned: return "NotVerticallyAligned";
    case ErrorKind::NotOnDiameter: return "NotOnDiameter";
    case ErrorKind::EqualModuli: return "EqualModuli";
    case ErrorKind::CollinearWithOrigin: return "CollinearWithOrigin";
    case ErrorKind::MethodInapplicable: return "MethodInapplicable";
    case ErrorKind::ChainSaturated: return "ChainSaturated";
  }
  return "Unknown";
}

/// Raised by every geometric operation whose precondition fails.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A construction method that cannot be carried out for this input. `cause`
/// names the underlying obstruction (EqualModuli, ParallelLines, ...).
class MethodInapplicable : public GeometryError {
 public:
  MethodInapplicable(ErrorKind cause, const std::string& message)
      : GeometryError(ErrorKind::MethodInapplicable,
                      std::string(to_string(cause)) + ": " + message),
        cause_(cause) {}

  ErrorKind cause() const noexcept { return cause_; }

 private:
  ErrorKind cause_;
};

}  // namespace hypmid
