#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace np {

enum class ErrorKind {
  DegenerateMatrix,
  DegenerateInput,
  NotFullDimensional,
  NotCoprime,
  NotPrime,
  NotDiagonal,
  NotIndecomposable,
  IncomparablePolygons,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for every contract violation in the library; the kind
// is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace np
