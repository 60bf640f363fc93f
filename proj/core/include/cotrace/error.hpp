#pragma once

#include <stdexcept>
#include <string>

namespace cotrace {

enum class ErrorKind {
  FunctorOnly,     // operation needs a monad, value kind is DoublePow
  MassOverflow,    // subdistribution total mass exceeds 1
  KindMismatch,    // monad kind / modality / carrier disagree
  InvalidValue,    // non-canonical or out-of-carrier value
  UnknownSymbol,   // state, letter or operation not declared
  SizeGuard,       // enumeration exceeds the configured bound
  ShapeMismatch,   // languages or tables of different shape
  DepthUnderflow,  // semantic-state lookup past its truncation depth
  NotInitial,      // residual taken on an operation outside Init
  Unsupported,     // request outside the supported desk-scale range
  Parse,           // malformed machine file
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace cotrace
