#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gwspec {

/// Signed 128-bit integer used for every exact quantity (discriminants,
/// surd parts, cosine offsets). Arithmetic through the checked_* helpers
/// throws std::overflow_error instead of wrapping.
using wide_int = __int128;

struct invalid_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

wide_int checked_add(wide_int lhs, wide_int rhs);
wide_int checked_sub(wide_int lhs, wide_int rhs);
wide_int checked_mul(wide_int lhs, wide_int rhs);

/// Floor of the square root. Throws invalid_parameter for v < 0.
wide_int isqrt(wide_int v);

/// True iff v >= 0 and v is the square of an integer.
bool is_perfect_square(wide_int v);

/// Exact root of a perfect square, nullopt otherwise.
std::optional<wide_int> exact_sqrt(wide_int v);

/// Non-negative gcd; gcd(0, 0) == 0.
wide_int gcd(wide_int a, wide_int b);

/// Euclidean remainder in [0, |m|).
wide_int floor_mod(wide_int v, wide_int m);

std::string to_string(wide_int v);
wide_int parse_wide_int(const std::string& text);

/// Narrowing with a range check.
std::int64_t to_int64(wide_int v);
bool fits_int64(wide_int v);

}  // namespace gwspec
