#ifndef ARTKERNEL_ERRORS_HPP
#define ARTKERNEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace artkernel {

// Error taxonomy used across the library. The CLI maps kinds to exit codes:
// Input -> 2, Precondition -> 3, Internal -> 4.
enum class ErrorKind { Input, Precondition, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& code() const { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void throw_input(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Input, code, msg);
}

[[noreturn]] inline void throw_precondition(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Precondition, code, msg);
}

[[noreturn]] inline void throw_internal(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Internal, code, msg);
}

// Internal invariant check. Violations indicate a bug, not bad input.
inline void require_internal(bool ok, const std::string& msg) {
  if (!ok) throw_internal("invariant", msg);
}

}  // namespace artkernel

#endif  // ARTKERNEL_ERRORS_HPP
