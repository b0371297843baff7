#include "qtangle/errors.hpp"

namespace qtangle {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroState: return "ZeroState";
    case ErrorKind::BadSubset: return "BadSubset";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::BadDim: return "BadDim";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::BadParam: return "BadParam";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::StaleReport: return "StaleReport";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace qtangle
