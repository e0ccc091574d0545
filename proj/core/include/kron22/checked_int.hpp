#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace kron22 {

// All engine arithmetic goes through 128-bit checked operations: values at
// desk scale stay small, but a silent wrap would corrupt exact results.
using int128 = __int128;

[[noreturn]] inline void throw_overflow() {
  throw std::overflow_error("kron22: integer overflow in exact arithmetic");
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow();
  return r;
}

inline int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow();
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow();
  return r;
}

inline long long narrow_to_i64(int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw_overflow();
  return static_cast<long long>(v);
}

// Floor/ceil division with exact semantics for negative operands.
inline long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline long long ceil_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) == (b < 0))) ++q;
  return q;
}

}  // namespace kron22
