#include "gwspec/integer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gwspec {

wide_int checked_add(wide_int lhs, wide_int rhs) {
  wide_int out;
  if (__builtin_add_overflow(lhs, rhs, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

wide_int checked_sub(wide_int lhs, wide_int rhs) {
  wide_int out;
  if (__builtin_sub_overflow(lhs, rhs, &out)) throw std::overflow_error("integer overflow in subtraction");
  return out;
}

wide_int checked_mul(wide_int lhs, wide_int rhs) {
  wide_int out;
  if (__builtin_mul_overflow(lhs, rhs, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

wide_int isqrt(wide_int v) {
  if (v < 0) throw invalid_parameter("isqrt of a negative value");
  if (v < 2) return v;
  // Floating seed, then integer correction in both directions.
  auto r = static_cast<wide_int>(std::sqrt(static_cast<long double>(v)));
  // floor(sqrt(2^127 - 1)); r*r never overflows once r is clamped.
  const wide_int cap = static_cast<wide_int>(13043817825332782212ULL);
  r = std::min(r, cap);
  while (r * r > v) --r;
  while ((r + 1) <= cap && (r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool is_perfect_square(wide_int v) {
  if (v < 0) return false;
  const wide_int r = isqrt(v);
  return r * r == v;
}

std::optional<wide_int> exact_sqrt(wide_int v) {
  if (v < 0) return std::nullopt;
  const wide_int r = isqrt(v);
  if (r * r != v) return std::nullopt;
  return r;
}

wide_int gcd(wide_int a, wide_int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const wide_int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

wide_int floor_mod(wide_int v, wide_int m) {
  if (m < 0) m = -m;
  const wide_int r = v % m;
  return r < 0 ? r + m : r;
}

std::string to_string(wide_int v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work in unsigned space so the minimum value prints correctly.
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

wide_int parse_wide_int(const std::string& text) {
  if (text.empty()) throw invalid_parameter("empty integer literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw invalid_parameter("malformed integer literal: " + text);
  wide_int value = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch < '0' || ch > '9') throw invalid_parameter("malformed integer literal: " + text);
    value = checked_add(checked_mul(value, 10), negative ? -(ch - '0') : (ch - '0'));
  }
  return value;
}

bool fits_int64(wide_int v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(wide_int v) {
  if (!fits_int64(v)) throw std::overflow_error("value does not fit in 64 bits: " + to_string(v));
  return static_cast<std::int64_t>(v);
}

}  // namespace gwspec
