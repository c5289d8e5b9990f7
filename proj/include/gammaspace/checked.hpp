#pragma once

#include <cstddef>
#include <cstdint>

#include "gammaspace/error.hpp"

namespace gammaspace::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

/// a + b * c
inline std::int64_t fma(std::int64_t a, std::int64_t b, std::int64_t c) { return add(a, mul(b, c)); }

/// Saturating size arithmetic for cardinality estimates; SIZE_MAX means "too big".
inline std::size_t sat_mul(std::size_t a, std::size_t b) {
  std::size_t r;
  if (__builtin_mul_overflow(a, b, &r)) return static_cast<std::size_t>(-1);
  return r;
}

inline std::size_t sat_add(std::size_t a, std::size_t b) {
  std::size_t r;
  if (__builtin_add_overflow(a, b, &r)) return static_cast<std::size_t>(-1);
  return r;
}

inline std::size_t sat_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

}  // namespace gammaspace::checked
