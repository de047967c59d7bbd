#pragma once

#include <compare>
#include <string>
#include <variant>

#include "gwspec/integer.hpp"

namespace gwspec {

struct IntegerValue {
  wide_int value;
  friend bool operator==(const IntegerValue&, const IntegerValue&) = default;
};

/// (u + sign * sqrt(t)) / 2 with t > 0 not a perfect square.
struct Surd {
  wide_int u;
  wide_int t;
  int sign;
  friend bool operator==(const Surd&, const Surd&) = default;
};

/// c0 - 2cos(2*pi*j/n) with gcd(j, n) == 1, 0 < 2j < n, and 2cos(2*pi*j/n)
/// of algebraic degree at least 3 (so it is neither an integer nor a surd).
struct CosineTerm {
  wide_int c0;
  wide_int j;
  wide_int n;
  friend bool operator==(const CosineTerm&, const CosineTerm&) = default;
};

/// An exact real eigenvalue in canonical form. The factory functions
/// normalize, so two values are equal iff their representations are.
class ExactEigenvalue {
 public:
  using Form = std::variant<IntegerValue, Surd, CosineTerm>;

  static ExactEigenvalue integer(wide_int v);

  /// (u + sign * sqrt(t)) / 2. A perfect-square t collapses to an integer;
  /// throws std::domain_error if that integer would be a half-integer.
  static ExactEigenvalue surd(wide_int u, wide_int t, int sign);

  /// c0 - sign * 2cos(2*pi*j/n) for any integer j and n >= 1. Values with
  /// 2cos rational collapse to integers, quadratic ones (reduced
  /// denominators 5, 8, 10, 12) to surds, and the rest are rewritten with
  /// sign +1 and a reduced fraction in (0, 1/2).
  static ExactEigenvalue cosine(wide_int c0, wide_int j, wide_int n, int sign = 1);

  const Form& form() const { return form_; }
  bool is_integer() const { return std::holds_alternative<IntegerValue>(form_); }
  wide_int integer_value() const { return std::get<IntegerValue>(form_).value; }

  /// 0 integer, 1 surd, 2 cosine.
  int kind_rank() const { return static_cast<int>(form_.index()); }

  /// Same value shifted by an integer.
  ExactEigenvalue plus(wide_int offset) const;
  /// Same value negated.
  ExactEigenvalue negated() const;

  friend bool operator==(const ExactEigenvalue&, const ExactEigenvalue&) = default;

 private:
  explicit ExactEigenvalue(Form f) : form_(f) {}
  Form form_;
};

/// Floating evaluation of the defining formula.
long double numeric_value_ld(const ExactEigenvalue& e);
double numeric_value(const ExactEigenvalue& e);

/// Output order: descending value, then integer < surd < cosine, then fields.
bool output_before(const ExactEigenvalue& lhs, const ExactEigenvalue& rhs);

std::string to_string(const ExactEigenvalue& e);

}  // namespace gwspec
