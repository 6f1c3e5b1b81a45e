#pragma once

#include <cstdint>
#include <stdexcept>

namespace mostar::detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit counter overflow");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit counter overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("64-bit counter overflow");
  return r;
}

inline std::int64_t to_signed(std::uint64_t a) {
  if (a > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("value exceeds int64");
  return static_cast<std::int64_t>(a);
}

}  // namespace mostar::detail
