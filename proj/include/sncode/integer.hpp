#pragma once

#include <cstdint>
#include <string>

namespace sncode {

/// Exact signed integer used for character values, class sizes and polynomial
/// coefficients. All arithmetic on it goes through the checked helpers below.
using Int = __int128;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// n! with overflow checking.
Int factorial(int n);

Int gcd(Int a, Int b);

std::string to_string(Int value);

/// Narrows to int64, throwing LimitExceeded when the value does not fit.
std::int64_t to_int64(Int value);

/// Exact rational in lowest terms with a positive denominator.
struct Rational {
  Int num = 0;
  Int den = 1;

  static Rational make(Int num, Int den);

  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(const Rational& q);

} // namespace sncode
