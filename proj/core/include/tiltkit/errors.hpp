#pragma once

#include <stdexcept>
#include <string>

namespace tiltkit {

enum class ErrorKind {
  IllDefined,
  MismatchedTarget,
  MismatchedSource,
  MismatchedEndpoints,
  NotBObject,
  NonCommutingSquare,
  NotComposable,
  ExactnessFailure,
  NotCompatible,
  NonZeroComposite,
  TransferFailure,
  NotCObject,
  PreconditionViolated,
  UnknownKind,
  UnknownSuite,
  InvalidInput,
};

const char* error_name(ErrorKind k);

class TiltError : public std::runtime_error {
 public:
  TiltError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {}
  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw TiltError(kind, detail); }

}  // namespace tiltkit
