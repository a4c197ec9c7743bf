#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace recop {

/// Exact rational scalar used by every algebraic-mode computation.
/// boost::multiprecision keeps values in lowest terms with positive
/// denominator, which is exactly the storage invariant we need.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a 2-form that must be non-degenerate has zero Pfaffian.
struct DegenerateFormError : Error {
  using Error::Error;
};

/// Parse "p", "-p" or "p/q" with nonzero q. Anything else throws.
Rational parse_rational(std::string_view text);

/// Canonical rendering: "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& value);

/// Explicit lossy conversion; algebraic code never converts implicitly.
double rational_to_double(const Rational& value);

inline int sign_of(const Rational& value) {
  return value.sign();
}

}  // namespace recop
