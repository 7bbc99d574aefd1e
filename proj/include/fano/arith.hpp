#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fano {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorKind {
  Dimension,
  Constraint,
  Parity,
  IncompleteSpec,
  UnsupportedIndex,
  Division,
  Inconsistency,
  Scope,
  Usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// Returns the integer value of q, or throws a constraint error naming `what`.
Integer to_integer(const Rational& q, const char* what);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

// Narrowing used at serialization boundaries; throws a constraint error when out of range.
long long to_int64(const Integer& n);

}  // namespace fano
