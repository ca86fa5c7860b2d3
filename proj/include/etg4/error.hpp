#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace etg4 {

enum class ErrorKind {
  MalformedInput,           // loops, out-of-range ids
  Parse,                    // edge-list / group / lattice text
  Parameter,                // constructor parameters
  Precondition,             // operation called outside its domain
  ContractViolation,        // an internal invariant failed
  Embedding,                // invalid face list / not a quadrangulation
  NonOrientable,            // development hit a reflection
  NotMember,                // classify called on a graph outside F
  ClassificationViolation,  // a decision-tree branch failed to verify
  Io,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace etg4
