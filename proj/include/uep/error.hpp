#pragma once

#include <stdexcept>
#include <string>

namespace uep {

/// Failure categories. The CLI maps these onto its exit codes.
enum class ErrorKind {
  kInvalidArgument,  // parameters violate a documented precondition
  kInfeasible,       // no admissible value exists (search cap, split, radius)
  kCapExceeded,      // instance too large for explicit enumeration
  kMalformedInput,   // unparsable codebook file
  kInternal,         // a construction invariant broke
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::kInvalidArgument, what);
}

}  // namespace uep
