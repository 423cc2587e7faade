#ifndef PROJCONV_ERROR_HPP
#define PROJCONV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace projconv {

enum class ErrorKind {
  ZeroVector,
  DimensionMismatch,
  EqualPoints,
  NotMembers,
  NotContained,
  NotDisjoint,
  InvalidPolytope,
  MixedTopology,
  SideMismatch,
  EmptyMultiConvex,
  EmptySet,
  WholeSpace,
  NotSaturated,
  NotAComponent,
  DegeneratePolygon,
  NotGeneric,
  CollinearVertices,
  NoAvoidingLines,
  VerificationFailure,
  Parse,
  IOError,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EqualPoints: return "EqualPoints";
    case ErrorKind::NotMembers: return "NotMembers";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::InvalidPolytope: return "InvalidPolytope";
    case ErrorKind::MixedTopology: return "MixedTopology";
    case ErrorKind::SideMismatch: return "SideMismatch";
    case ErrorKind::EmptyMultiConvex: return "EmptyMultiConvex";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::WholeSpace: return "WholeSpace";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::NotAComponent: return "NotAComponent";
    case ErrorKind::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorKind::NotGeneric: return "NotGeneric";
    case ErrorKind::CollinearVertices: return "CollinearVertices";
    case ErrorKind::NoAvoidingLines: return "NoAvoidingLines";
    case ErrorKind::VerificationFailure: return "VerificationFailure";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::IOError: return "IOError";
  }
  return "Unknown";
}

/// Single exception type for the library; the kind drives CLI exit codes and tests.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace projconv

#endif  // PROJCONV_ERROR_HPP
