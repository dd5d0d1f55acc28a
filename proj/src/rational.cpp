#include "pjl/rational.hpp"

#include <cctype>

#include "pjl/error.hpp"

namespace pjl {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kPrecondition: return "PreconditionFailed";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kZeroResultant: return "ZeroResultant";
    case ErrorCode::kExtensionBudgetExceeded: return "ExtensionBudgetExceeded";
    case ErrorCode::kCutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::kNotSeparated: return "NotSeparated";
    case ErrorCode::kNotJacobianPair: return "NotJacobianPair";
    case ErrorCode::kNotSquarefree: return "NotSquarefree";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kRetriesExhausted: return "RetriesExhausted";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t j = digits(i);
  if (j == i) fail(ErrorCode::kInvalidArgument, "malformed rational '" + s + "'");
  if (j < s.size()) {
    if (s[j] != '/') fail(ErrorCode::kInvalidArgument, "malformed rational '" + s + "'");
    std::size_t k = digits(j + 1);
    if (k == j + 1 || k != s.size())
      fail(ErrorCode::kInvalidArgument, "malformed rational '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) fail(ErrorCode::kInvalidArgument, "malformed rational '" + s + "'");
  if (r.get_den() == 0) fail(ErrorCode::kInvalidArgument, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational rational_pow(const Rational& base, long exponent) {
  Rational result = 1;
  Rational b = base;
  bool invert = exponent < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  mpz_pow_ui(result.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(result.get_den_mpz_t(), b.get_den_mpz_t(), e);
  result.canonicalize();
  if (invert) {
    if (result == 0) fail(ErrorCode::kInvalidArgument, "zero to a negative power");
    result = 1 / result;
  }
  return result;
}

Integer integer_floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer integer_ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace pjl
