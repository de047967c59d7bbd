#include "gwspec/exact_eigenvalue.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace gwspec {

namespace {

// 2cos(2*pi*k/d) = (p + q*sqrt(r)) / 2 for the reduced fractions whose
// cosine is a quadratic irrational.
struct QuadraticCosine {
  int d;
  int k;
  int p;
  int q;
  int r;
};

constexpr QuadraticCosine kQuadratic[] = {
    {5, 1, -1, 1, 5},  {5, 2, -1, -1, 5}, {10, 1, 1, 1, 5},  {10, 3, 1, -1, 5},
    {8, 1, 0, 1, 8},   {8, 3, 0, -1, 8},  {12, 1, 0, 1, 12}, {12, 5, 0, -1, 12},
};

// 2cos(2*pi*k/d) when it is an integer.
std::optional<int> rational_two_cos(wide_int d) {
  switch (static_cast<int>(d)) {
    case 1: return 2;
    case 2: return -2;
    case 3: return -1;
    case 4: return 0;
    case 6: return 1;
    default: return std::nullopt;
  }
}

}  // namespace

ExactEigenvalue ExactEigenvalue::integer(wide_int v) { return ExactEigenvalue(IntegerValue{v}); }

ExactEigenvalue ExactEigenvalue::surd(wide_int u, wide_int t, int sign) {
  if (t < 0) throw invalid_parameter("surd radicand must be non-negative");
  if (sign != 1 && sign != -1) throw invalid_parameter("surd sign must be +1 or -1");
  if (const auto root = exact_sqrt(t)) {
    const wide_int twice = checked_add(u, sign * *root);
    if (floor_mod(twice, 2) != 0) {
      throw std::domain_error("surd with square radicand is a half-integer: (" + to_string(u) + " + " +
                              std::to_string(sign) + "*sqrt(" + to_string(t) + "))/2");
    }
    return integer(twice / 2);
  }
  return ExactEigenvalue(Surd{u, t, sign});
}

ExactEigenvalue ExactEigenvalue::cosine(wide_int c0, wide_int j, wide_int n, int sign) {
  if (n < 1) throw invalid_parameter("cosine denominator must be positive");
  if (sign != 1 && sign != -1) throw invalid_parameter("cosine sign must be +1 or -1");
  wide_int k = floor_mod(j, n);
  if (2 * k > n) k = n - k;
  wide_int g = gcd(k, n);
  wide_int d = n / g;
  k /= g;

  if (const auto two_cos = rational_two_cos(d)) {
    return integer(checked_sub(c0, sign * *two_cos));
  }
  for (const auto& qc : kQuadratic) {
    if (qc.d == d && qc.k == k) {
      return surd(checked_sub(checked_mul(2, c0), sign * qc.p), qc.r, -sign * qc.q);
    }
  }
  if (sign < 0) {
    // c0 + 2cos(x) = c0 - 2cos(pi - x)
    wide_int num = d - 2 * k;
    wide_int den = 2 * d;
    g = gcd(num, den);
    k = num / g;
    d = den / g;
  }
  return ExactEigenvalue(CosineTerm{c0, k, d});
}

ExactEigenvalue ExactEigenvalue::plus(wide_int offset) const {
  return std::visit(
      [offset](const auto& f) -> ExactEigenvalue {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, IntegerValue>) {
          return integer(checked_add(f.value, offset));
        } else if constexpr (std::is_same_v<T, Surd>) {
          return ExactEigenvalue(Surd{checked_add(f.u, checked_mul(2, offset)), f.t, f.sign});
        } else {
          return ExactEigenvalue(CosineTerm{checked_add(f.c0, offset), f.j, f.n});
        }
      },
      form_);
}

ExactEigenvalue ExactEigenvalue::negated() const {
  return std::visit(
      [](const auto& f) -> ExactEigenvalue {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, IntegerValue>) {
          return integer(-f.value);
        } else if constexpr (std::is_same_v<T, Surd>) {
          return ExactEigenvalue(Surd{-f.u, f.t, -f.sign});
        } else {
          return cosine(-f.c0, f.j, f.n, -1);
        }
      },
      form_);
}

long double numeric_value_ld(const ExactEigenvalue& e) {
  return std::visit(
      [](const auto& f) -> long double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, IntegerValue>) {
          return static_cast<long double>(f.value);
        } else if constexpr (std::is_same_v<T, Surd>) {
          return (static_cast<long double>(f.u) + f.sign * std::sqrt(static_cast<long double>(f.t))) / 2.0L;
        } else {
          const long double angle =
              2.0L * std::numbers::pi_v<long double> * static_cast<long double>(f.j) / static_cast<long double>(f.n);
          return static_cast<long double>(f.c0) - 2.0L * std::cos(angle);
        }
      },
      e.form());
}

double numeric_value(const ExactEigenvalue& e) { return static_cast<double>(numeric_value_ld(e)); }

bool output_before(const ExactEigenvalue& lhs, const ExactEigenvalue& rhs) {
  const long double lv = numeric_value_ld(lhs);
  const long double rv = numeric_value_ld(rhs);
  if (lv != rv) return lv > rv;
  if (lhs.kind_rank() != rhs.kind_rank()) return lhs.kind_rank() < rhs.kind_rank();
  return std::visit(
      [&rhs](const auto& f) -> bool {
        using T = std::decay_t<decltype(f)>;
        const auto& g = std::get<T>(rhs.form());
        if constexpr (std::is_same_v<T, IntegerValue>) {
          return false;
        } else if constexpr (std::is_same_v<T, Surd>) {
          return std::tie(f.u, f.t, f.sign) < std::tie(g.u, g.t, g.sign);
        } else {
          return std::tie(f.c0, f.j, f.n) < std::tie(g.c0, g.j, g.n);
        }
      },
      lhs.form());
}

std::string to_string(const ExactEigenvalue& e) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, IntegerValue>) {
          return to_string(f.value);
        } else if constexpr (std::is_same_v<T, Surd>) {
          return "(" + to_string(f.u) + (f.sign > 0 ? " + " : " - ") + "sqrt(" + to_string(f.t) + "))/2";
        } else {
          return to_string(f.c0) + " - 2cos(2pi*" + to_string(f.j) + "/" + to_string(f.n) + ")";
        }
      },
      e.form());
}

}  // namespace gwspec
