#pragma once

#include <cstdint>

#include "flagcycles/errors.hpp"

namespace flagcycles::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

/// Floor division; `b` must be nonzero.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == -1) return checked_neg(a);
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace flagcycles::detail
