// Exact rational scalars backed by GMP.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace inflect {

/// Reduced fraction with positive denominator. mpq_class keeps the
/// canonical form after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q" or an integer literal. Decimal points, exponents and a zero
/// denominator are rejected.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

/// 2^-bits as an exact rational.
Rational pow2_neg(unsigned bits);

}  // namespace inflect
