#pragma once

#include <stdexcept>
#include <string>

namespace liemult {

enum class Errc {
  ParseError,
  DimensionMismatch,
  NotAnIdeal,
  ClassTooHigh,
  ConfigInvalid,
  EnumerationTooLarge,
  ParamConstraint,
  MethodDisagreement,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Always-on consistency check; violations are library bugs, not user errors.
inline void internal_check(bool cond, const char* what) {
  if (!cond) throw Error(Errc::Internal, what);
}

}  // namespace liemult
