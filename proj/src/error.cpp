#include "etg4/error.hpp"

namespace etg4 {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput: return "malformed_input";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::ContractViolation: return "contract_violation";
    case ErrorKind::Embedding: return "embedding";
    case ErrorKind::NonOrientable: return "non_orientable";
    case ErrorKind::NotMember: return "not_member";
    case ErrorKind::ClassificationViolation: return "classification_violation";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace etg4
