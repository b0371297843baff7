#pragma once

#include <stdexcept>
#include <string>

namespace qtangle {

enum class ErrorKind {
  ZeroState,
  BadSubset,
  NotUnitary,
  BadPermutation,
  BadDim,
  BadIndex,
  BadParam,
  BadInput,
  NumericalFailure,
  InternalMismatch,
  StaleReport,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qtangle
