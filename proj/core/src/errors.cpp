#include "tiltkit/errors.hpp"

namespace tiltkit {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::IllDefined: return "IllDefined";
    case ErrorKind::MismatchedTarget: return "MismatchedTarget";
    case ErrorKind::MismatchedSource: return "MismatchedSource";
    case ErrorKind::MismatchedEndpoints: return "MismatchedEndpoints";
    case ErrorKind::NotBObject: return "NotBObject";
    case ErrorKind::NonCommutingSquare: return "NonCommutingSquare";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::ExactnessFailure: return "ExactnessFailure";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::NonZeroComposite: return "NonZeroComposite";
    case ErrorKind::TransferFailure: return "TransferFailure";
    case ErrorKind::NotCObject: return "NotCObject";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::UnknownKind: return "UnknownKind";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace tiltkit
