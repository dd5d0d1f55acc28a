#pragma once

#include <stdexcept>
#include <string>

namespace pjl {

enum class ErrorCode {
  kInvalidArgument,
  kSyntax,
  kPrecondition,
  kZeroPolynomial,
  kZeroResultant,
  kExtensionBudgetExceeded,
  kCutoffTooSmall,
  kNotSeparated,
  kNotJacobianPair,
  kNotSquarefree,
  kNoSolution,
  kRetriesExhausted,
  kIndexOutOfRange,
  kNotFound,
  kInternal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::kSyntax, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace pjl
