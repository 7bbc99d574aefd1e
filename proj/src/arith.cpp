#include "fano/arith.hpp"

#include <limits>

namespace fano {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Dimension: return "dimension error";
    case ErrorKind::Constraint: return "constraint error";
    case ErrorKind::Parity: return "parity error";
    case ErrorKind::IncompleteSpec: return "incomplete-spec error";
    case ErrorKind::UnsupportedIndex: return "unsupported-index error";
    case ErrorKind::Division: return "division error";
    case ErrorKind::Inconsistency: return "inconsistency error";
    case ErrorKind::Scope: return "unsupported-scope error";
    case ErrorKind::Usage: return "usage error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Integer to_integer(const Rational& q, const char* what) {
  if (!is_integral(q)) {
    throw Error(ErrorKind::Constraint, std::string(what) + " is not an integer (" + to_string(q) + ")");
  }
  return boost::multiprecision::numerator(q);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

long long to_int64(const Integer& n) {
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min()) {
    throw Error(ErrorKind::Constraint, "integer " + n.str() + " does not fit in 64 bits");
  }
  return n.convert_to<long long>();
}

}  // namespace fano
