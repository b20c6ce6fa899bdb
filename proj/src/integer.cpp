#include "sncode/integer.hpp"

#include "sncode/error.hpp"

#include <algorithm>
#include <limits>

namespace sncode {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out))
    throw LimitExceeded("integer overflow in addition");
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out))
    throw LimitExceeded("integer overflow in subtraction");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out))
    throw LimitExceeded("integer overflow in multiplication");
  return out;
}

Int factorial(int n) {
  if (n < 0)
    throw InvalidArgument("factorial of a negative number");
  Int out = 1;
  for (int i = 2; i <= n; ++i)
    out = checked_mul(out, i);
  return out;
}

Int gcd(Int a, Int b) {
  if (a < 0)
    a = -a;
  if (b < 0)
    b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(Int value) {
  if (value == 0)
    return "0";
  bool negative = value < 0;
  // Work on the negative side so INT128_MIN needs no special case.
  if (!negative)
    value = -value;
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(value % 10)));
    value /= 10;
  }
  if (negative)
    digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::int64_t to_int64(Int value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    throw LimitExceeded("value " + to_string(value) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(value);
}

Rational Rational::make(Int num, Int den) {
  if (den == 0)
    throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  Int g = gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0)
    den = 1;
  return Rational{num, den};
}

std::string to_string(const Rational& q) {
  if (q.den == 1)
    return to_string(q.num);
  return to_string(q.num) + "/" + to_string(q.den);
}

} // namespace sncode
