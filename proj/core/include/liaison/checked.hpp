#pragma once

#include <cstdint>

#include "liaison/error.hpp"

// Overflow-checked 64-bit arithmetic. Every lattice and Hilbert-function
// computation goes through these; a wrap is never silently accepted.
namespace liaison::checked {

using Int = std::int64_t;

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step
    r = mul(r, n - k + i) / i;
  }
  return r;
}

}  // namespace liaison::checked
