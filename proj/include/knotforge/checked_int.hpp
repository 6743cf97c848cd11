#pragma once

#include <cstdint>

#include "knotforge/errors.hpp"

namespace knotforge {

// 64-bit integer arithmetic that refuses to wrap around. All exact linear
// algebra in this library goes through these helpers, so overflow surfaces
// as ArithmeticOverflow instead of a silently wrong answer.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer addition overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer subtraction overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer multiplication overflow");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw InvalidArgument("division by zero");
  if (a == INT64_MIN && b == -1) throw ArithmeticOverflow("integer division overflow");
  return a / b;
}

inline std::int64_t checked_rem(std::int64_t a, std::int64_t b) {
  if (b == 0) throw InvalidArgument("remainder by zero");
  if (a == INT64_MIN && b == -1) return 0;
  return a % b;
}

}  // namespace knotforge
