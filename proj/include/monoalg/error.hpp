#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace monoalg {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind {
  invalid_input = 1,
  precondition = 2,
  internal = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<mpz_class> witness = {})
      : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Lattice point attached to the failure (e.g. a non-saturation witness); may be empty.
  const std::vector<mpz_class>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<mpz_class> witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what,
                              std::vector<mpz_class> witness = {}) {
  throw Error(kind, what, std::move(witness));
}

}  // namespace monoalg
