#pragma once

#include <stdexcept>

namespace ppart {

// All polynomial coefficients are exact 64-bit integers; every arithmetic
// step is overflow-checked and throws instead of wrapping.
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in coefficient addition");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in coefficient multiplication");
  return r;
}

inline long long checked_neg(long long a) { return checked_mul(a, -1); }

}  // namespace ppart
