#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace tempdistill {

// Domain error with a stable machine-readable code. Codes are the ones
// callers and the CLI error records key on ("DanglingTlink", "ZeroVector",
// "RowCountMismatch", ...). The message is free-form context.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void raise(std::string code, const std::string& message) {
  throw Error(std::move(code), message);
}

// Thrown by constraint propagation / the closure oracle. Carries the event
// triple (or pair) that witnessed the contradiction.
class InconsistentError : public Error {
 public:
  InconsistentError(std::string a, std::string b, std::string c,
                    const std::string& message)
      : Error("Inconsistent", message), witness_{std::move(a), std::move(b), std::move(c)} {}

  const std::array<std::string, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<std::string, 3> witness_;
};

}  // namespace tempdistill
