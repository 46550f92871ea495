#pragma once

#include <stdexcept>
#include <string>

namespace pdeforge {

// Error taxonomy shared by the C++ core, the C API (as status codes) and the
// CLI (as exit codes / machine-readable error objects).
enum class ErrorKind {
  IncompatibleRing,  // ring variant or cyclotomic modulus mismatch
  SizeGuard,         // brute-force scale guard tripped
  Precondition,      // operation-specific precondition violated
  InvalidPde,        // m-th power of a coefficient is neither 0 nor 1
  Parse,             // malformed JSON or flag value
  NonConvergence,    // numeric search failed to reach tolerance
  Usage,             // bad subcommand / flag combination
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IncompatibleRing: return "incompatible-ring";
    case ErrorKind::SizeGuard: return "size-guard";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::InvalidPde: return "invalid-pde";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace pdeforge
