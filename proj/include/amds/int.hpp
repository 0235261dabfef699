#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace amds {

// Exact integer used for every coefficient. Overflow is a hard error.
using Int = __int128;

struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int add_checked(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in add");
  return r;
}

inline Int sub_checked(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw InternalError("integer overflow in sub");
  return r;
}

inline Int mul_checked(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in mul");
  return r;
}

std::string to_string(Int v);
Int int_from_string(const std::string& s);

inline bool fits_int64(Int v) {
  return v >= static_cast<Int>(INT64_MIN) && v <= static_cast<Int>(INT64_MAX);
}

Int ipow(Int base, int e);
Int binom(int n, int k);

}  // namespace amds
