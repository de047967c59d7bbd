#include "gwspec/spectra.hpp"

#include <cmath>
#include <string>

namespace gwspec {

namespace {

// Both eigenvalues of the 2x2 matrix [[p, q], [r, s]] with q*r >= 0.
void add_quotient_pair(Spectrum& out, wide_int p, wide_int q, wide_int r, wide_int s) {
  const wide_int u = checked_add(p, s);
  const wide_int diff = checked_sub(p, s);
  const wide_int t = checked_add(checked_mul(diff, diff), checked_mul(4, checked_mul(q, r)));
  out.add(ExactEigenvalue::surd(u, t, 1));
  out.add(ExactEigenvalue::surd(u, t, -1));
}

// The part's adjacency spectrum with one copy of the degree removed.
Spectrum nontrivial_eigenvalues(const RegularPart& part) {
  Spectrum rest = part.adjacency;
  if (!rest.remove_one(ExactEigenvalue::integer(part.degree))) {
    throw invalid_regular_part("adjacency spectrum lacks the degree " + std::to_string(part.degree));
  }
  return rest;
}

void check_count(std::int64_t v, std::int64_t min, const char* what) {
  if (v < min) throw invalid_parameter(std::string(what) + " must be >= " + std::to_string(min));
}

}  // namespace

RegularPart RegularPart::make(std::int64_t order, std::int64_t degree, Spectrum adjacency) {
  if (order < 1) throw invalid_regular_part("order must be positive");
  if (degree < 0 || degree >= order) throw invalid_regular_part("degree out of range");
  if (adjacency.order() != static_cast<std::size_t>(order)) {
    throw invalid_regular_part("spectrum multiplicity does not match the order");
  }
  if (!adjacency.contains(ExactEigenvalue::integer(degree))) {
    throw invalid_regular_part("spectrum lacks the degree eigenvalue");
  }
  for (const auto& e : adjacency.entries()) {
    if (numeric_value(e.value) > static_cast<double>(degree) + 1e-9) {
      throw invalid_regular_part("eigenvalue exceeds the degree");
    }
  }
  const long double sum = adjacency.numeric_sum();
  if (std::fabs(static_cast<double>(sum)) > 1e-9 * static_cast<double>(order + 1)) {
    throw invalid_regular_part("adjacency eigenvalues must sum to zero");
  }
  return RegularPart{order, degree, std::move(adjacency)};
}

Spectrum adjacency_spectrum_complete(std::int64_t m) { return adjacency_spectrum_copies(1, m); }

Spectrum adjacency_spectrum_copies(std::int64_t a, std::int64_t m) {
  check_count(a, 1, "a");
  check_count(m, 1, "m");
  Spectrum s;
  s.add(ExactEigenvalue::integer(m - 1), static_cast<std::size_t>(a));
  s.add(ExactEigenvalue::integer(-1), static_cast<std::size_t>(a * (m - 1)));
  return s;
}

Spectrum adjacency_spectrum_cycle(std::int64_t n) {
  check_count(n, 3, "n");
  Spectrum s;
  for (std::int64_t j = 0; j < n; ++j) s.add(ExactEigenvalue::cosine(0, j, n, -1));
  return s;
}

RegularPart complete_part(std::int64_t m) { return RegularPart::make(m, m - 1, adjacency_spectrum_complete(m)); }

RegularPart copies_part(std::int64_t a, std::int64_t m) {
  return RegularPart::make(a * m, m - 1, adjacency_spectrum_copies(a, m));
}

RegularPart cycle_part(std::int64_t n) { return RegularPart::make(n, 2, adjacency_spectrum_cycle(n)); }

Spectrum dq_join_spectrum(const RegularPart& p1, const RegularPart& p2) {
  const wide_int n1 = p1.order, n2 = p2.order, r1 = p1.degree, r2 = p2.degree;
  Spectrum out;
  const wide_int shift1 = 2 * (n1 - 2) + n2 - r1;
  const wide_int shift2 = 2 * (n2 - 2) + n1 - r2;
  out.add(nontrivial_eigenvalues(p1).transformed([&](const ExactEigenvalue& l) { return l.negated().plus(shift1); }));
  out.add(nontrivial_eigenvalues(p2).transformed([&](const ExactEigenvalue& l) { return l.negated().plus(shift2); }));
  const wide_int u = -8 + 5 * (n1 + n2) - 2 * (r1 + r2);
  const wide_int gap = 3 * (n1 - n2) - 2 * (r1 - r2);
  const wide_int t = checked_add(checked_mul(gap, gap), checked_mul(4, checked_mul(n1, n2)));
  out.add(ExactEigenvalue::surd(u, t, 1));
  out.add(ExactEigenvalue::surd(u, t, -1));
  return out;
}

Spectrum dl_join_spectrum(const RegularPart& p1, const RegularPart& p2) {
  const wide_int n1 = p1.order, n2 = p2.order, r1 = p1.degree, r2 = p2.degree;
  Spectrum out;
  const wide_int shift1 = 2 * n1 + n2 - r1;
  const wide_int shift2 = 2 * n2 + n1 - r2;
  out.add(nontrivial_eigenvalues(p1).transformed([&](const ExactEigenvalue& l) { return l.plus(shift1); }));
  out.add(nontrivial_eigenvalues(p2).transformed([&](const ExactEigenvalue& l) { return l.plus(shift2); }));
  // [[n2, -n2], [-n1, n1]] has eigenvalues n1 + n2 and 0.
  add_quotient_pair(out, n2, -n2, -n1, n1);
  return out;
}

Spectrum adjacency_join_spectrum(const RegularPart& p1, const RegularPart& p2) {
  Spectrum out;
  out.add(nontrivial_eigenvalues(p1));
  out.add(nontrivial_eigenvalues(p2));
  add_quotient_pair(out, p1.degree, p2.order, p1.order, p2.degree);
  return out;
}

Spectrum distance_join_spectrum(const RegularPart& p1, const RegularPart& p2) {
  const wide_int n1 = p1.order, n2 = p2.order, r1 = p1.degree, r2 = p2.degree;
  Spectrum out;
  // Within a part D = 2(J - I) - A.
  out.add(nontrivial_eigenvalues(p1).transformed([](const ExactEigenvalue& l) { return l.negated().plus(-2); }));
  out.add(nontrivial_eigenvalues(p2).transformed([](const ExactEigenvalue& l) { return l.negated().plus(-2); }));
  add_quotient_pair(out, 2 * (n1 - 1) - r1, n2, n1, 2 * (n2 - 1) - r2);
  return out;
}

Spectrum gw_dq_spectrum(const WheelParams& p) {
  const auto w = WheelParams::make(p.a, p.m, p.n);
  return dq_join_spectrum(copies_part(w.a, w.m), cycle_part(w.n));
}

Spectrum gw_dq_closed_form(const WheelParams& p, std::int64_t middle_offset) {
  const auto w = WheelParams::make(p.a, p.m, p.n);
  const wide_int a = w.a, m = w.m, n = w.n;
  Spectrum out;
  out.add(ExactEigenvalue::integer(2 * (a - 1) * m + n - 2), static_cast<std::size_t>(a - 1));
  out.add(ExactEigenvalue::integer((2 * a - 1) * m + n + middle_offset), static_cast<std::size_t>(a * (m - 1)));
  for (wide_int j = 1; j < n; ++j) out.add(ExactEigenvalue::cosine(a * m + 2 * n - 6, j, n, 1));
  const wide_int u = (5 * a - 2) * m + 5 * n - 10;
  const wide_int gap = checked_sub(checked_mul(3 * a - 2, m), 3 * n - 6);
  const wide_int t = checked_add(checked_mul(gap, gap), checked_mul(checked_mul(4 * a, m), n));
  out.add(ExactEigenvalue::surd(u, t, 1));
  out.add(ExactEigenvalue::surd(u, t, -1));
  return out;
}

Spectrum gw_dl_spectrum(const WheelParams& p) {
  const auto w = WheelParams::make(p.a, p.m, p.n);
  const wide_int a = w.a, m = w.m, n = w.n;
  Spectrum out;
  out.add(ExactEigenvalue::integer(2 * a * m + n), static_cast<std::size_t>(a - 1));
  out.add(ExactEigenvalue::integer(2 * a * m - m + n), static_cast<std::size_t>(a * (m - 1)));
  for (wide_int j = 1; j < n; ++j) out.add(ExactEigenvalue::cosine(a * m + 2 * n - 2, j, n, -1));
  out.add(ExactEigenvalue::integer(a * m + n));
  out.add(ExactEigenvalue::integer(0));
  return out;
}

Spectrum gw_adjacency_spectrum(const WheelParams& p) {
  const auto w = WheelParams::make(p.a, p.m, p.n);
  return adjacency_join_spectrum(copies_part(w.a, w.m), cycle_part(w.n));
}

Spectrum gw_distance_spectrum(const WheelParams& p) {
  const auto w = WheelParams::make(p.a, p.m, p.n);
  return distance_join_spectrum(copies_part(w.a, w.m), cycle_part(w.n));
}

}  // namespace gwspec
