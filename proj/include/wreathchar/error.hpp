#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wreathchar {

/// Arbitrary-precision integer used for degrees, character values and
/// cyclotomic coefficients.
using Integer = boost::multiprecision::cpp_int;

/// Malformed literal, inconsistent sizes, or a violated precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A group model was asked for a character value it cannot supply
/// (e.g. a nonlinear character of a linear-characters-only model).
class UnsupportedEvaluation : public std::domain_error {
 public:
  explicit UnsupportedEvaluation(const std::string& what) : std::domain_error(what) {}
};

}  // namespace wreathchar
