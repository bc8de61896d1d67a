#pragma once

#include <stdexcept>
#include <string>

namespace gorder {

// Coarse failure classes; the CLI maps them onto exit codes.
enum class ErrorKind {
  Validation,     // bad input: parse errors, invalid polygons, degenerate point sets
  Unsupported,    // request outside the supported cardinality range
  Construction,   // a constructive algorithm exhausted its retries
  Internal,       // invariant breach or precision exhaustion; indicates a bug or near-tie input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error collinear_input(const std::string& msg) {
  return Error(ErrorKind::Validation, "CollinearInput", msg);
}
inline Error duplicate_point(const std::string& msg) {
  return Error(ErrorKind::Validation, "DuplicatePoint", msg);
}
inline Error too_few_vertices(const std::string& msg) {
  return Error(ErrorKind::Validation, "TooFewVertices", msg);
}
inline Error point_outside_polygon(const std::string& msg) {
  return Error(ErrorKind::Validation, "PointOutsidePolygon", msg);
}
inline Error validation_error(const std::string& msg) {
  return Error(ErrorKind::Validation, "ValidationError", msg);
}
inline Error parse_error(const std::string& msg) {
  return Error(ErrorKind::Validation, "ParseError", msg);
}
inline Error size_mismatch(const std::string& msg) {
  return Error(ErrorKind::Validation, "SizeMismatch", msg);
}
inline Error not_convex_position(const std::string& msg) {
  return Error(ErrorKind::Validation, "NotConvexPosition", msg);
}
inline Error not_non_convex_four(const std::string& msg) {
  return Error(ErrorKind::Validation, "NotNonConvexFour", msg);
}
inline Error unsupported(const std::string& msg) {
  return Error(ErrorKind::Unsupported, "Unsupported", msg);
}
inline Error construction_failed(const std::string& msg) {
  return Error(ErrorKind::Construction, "ConstructionFailed", msg);
}
inline Error degenerate_divergence(const std::string& msg) {
  return Error(ErrorKind::Internal, "DegenerateDivergence", msg);
}
inline Error precision_exhausted(const std::string& msg) {
  return Error(ErrorKind::Internal, "PrecisionExhausted", msg);
}
inline Error internal_error(const std::string& msg) {
  return Error(ErrorKind::Internal, "InternalError", msg);
}

}  // namespace gorder
