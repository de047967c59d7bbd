#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwspec/graph.hpp"
#include "gwspec/integer.hpp"
#include "gwspec/spectra.hpp"

namespace gwspec {

/// Evidence for the D^Q verdict of one generalized wheel: the surd pair is
/// integral iff t is a square, and the cosine family iff n is 3, 4 or 6.
struct DqWitness {
  wide_int t;
  std::optional<wide_int> c;
  bool n_ok;
  bool verdict;
  friend bool operator==(const DqWitness&, const DqWitness&) = default;
};

struct ClassificationResult {
  WheelParams params;
  DqWitness dq;
  bool dl_verdict;
  std::optional<std::string> matched_case;
  friend bool operator==(const ClassificationResult&, const ClassificationResult&) = default;
};

enum class AlphaFamily { plus, minus };

/// One divisor alpha of K/2 that yields a positive integer m. The
/// factorization is alpha * ((3a-2)c - p) = K with alpha = (3a-2)c + p.
struct AlphaSolution {
  wide_int alpha;
  wide_int m;
  AlphaFamily family;
  wide_int c;
  wide_int p;
  friend bool operator==(const AlphaSolution&, const AlphaSolution&) = default;
};

/// For n in {3, 4, 6} the discriminant is t(m) = (3a-2)^2 m^2 - 2Bm + C, so
/// m = (B +- p) / (3a-2)^2 with (3a-2)^2 c^2 - p^2 = K = (3a-2)^2 C - B^2.
struct AlphaCase {
  wide_int linear;    // B
  wide_int constant;  // K
};

bool is_rim_integral(std::int64_t n);

/// ((3a-2)m - 3n + 6)^2 + 4amn, overflow-checked.
wide_int dq_discriminant(const WheelParams& p);

DqWitness is_dq_integral(const WheelParams& p);
bool is_gw_dl_integral(const WheelParams& p);

/// A join of regular graphs is D^L-integral iff both parts are
/// adjacency-integral.
bool is_join_dl_integral(const RegularPart& p1, const RegularPart& p2);

/// For a = 1 the discriminant is (m - n + 6)^2 + 8n(n-3). For n >= 4 the
/// m making it a square are finite and come from factor pairs of 8n(n-3);
/// returned ascending. Throws invalid_parameter for n < 4 (at n = 3 every m
/// works).
std::vector<std::int64_t> gw1_square_m_values(std::int64_t n);

ClassificationResult classify_gw1_dq(std::int64_t m, std::int64_t n);

/// Largest m for which GW(a,m,n), a >= 2, can be D^Q-integral.
std::int64_t m_upper_bound(std::int64_t n);

AlphaCase alpha_case(std::int64_t a, std::int64_t n);
std::vector<AlphaSolution> enumerate_alpha_solutions(std::int64_t a, std::int64_t n);

/// Distinct m values from enumerate_alpha_solutions, ascending.
std::vector<std::int64_t> alpha_m_values(std::int64_t a, std::int64_t n);

/// The sporadic D^Q-integral triples (everything outside a = 1, n = 3).
const std::vector<WheelParams>& sporadic_dq_triples();

/// Full classification of a single triple, with a case label when D^Q-integral.
ClassificationResult classify(const WheelParams& p);

struct DqClassification {
  /// Some (1, m, 3) lies in the scanned grid; these are not listed.
  bool infinite_family;
  /// Remaining D^Q-integral triples sorted by (a, m, n).
  std::vector<ClassificationResult> sporadic;
};

DqClassification classify_all_dq(std::int64_t a_max, std::int64_t m_max, const std::vector<std::int64_t>& n_set);

/// (5a-2)m + 5n - 10 and the D^Q discriminant have the same parity.
bool parity_check(std::int64_t a, std::int64_t m, std::int64_t n);

std::string case_label(const WheelParams& p);

}  // namespace gwspec
