#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gwspec/graph.hpp"
#include "gwspec/records.hpp"
#include "gwspec/spectra.hpp"

namespace gwspec {

/// Absolute tolerance for closed form vs oracle eigenvalues.
inline constexpr double kOracleTolerance = 1e-7;

struct VerifyOptions {
  std::int64_t max_order = 120;
  std::uint64_t seed = 1;
  /// 0 means: GWSPEC_THREADS if set, otherwise the hardware concurrency.
  unsigned threads = 0;
};

unsigned resolve_thread_count(unsigned requested);

/// A concrete regular graph paired with its exact description.
struct NamedPart {
  std::string name;
  Graph graph;
  RegularPart part;
};

NamedPart named_complete(std::int64_t p);
NamedPart named_cycle(std::int64_t q);
NamedPart named_copies(std::int64_t a, std::int64_t m);

/// K_p, C_q and aK_m (a >= 2) with order <= max_order.
std::vector<NamedPart> regular_family(std::int64_t max_order);

std::vector<WheelParams> wheels_up_to_order(std::int64_t max_order);
std::vector<WheelParams> wheel_grid(std::int64_t a_max, std::int64_t m_max, std::int64_t n_lo, std::int64_t n_hi);
/// `count` distinct triples with order <= max_order lying outside `exclude`.
std::vector<WheelParams> random_wheels(std::size_t count, std::int64_t max_order, std::uint64_t seed,
                                       const std::vector<WheelParams>& exclude);

/// Exact spectrum vs oracle, the second algebraic route, and the trace.
CheckResult check_gw_dq(const WheelParams& p, double tol = kOracleTolerance);
/// As check_gw_dq plus positive semidefiniteness and a single zero.
CheckResult check_gw_dl(const WheelParams& p, double tol = kOracleTolerance);
/// Passes when the (2a-1)m+n+2 variant of the D^Q spectrum disagrees with
/// the oracle. Requires m >= 2 so the family is present.
CheckResult check_plus_two_variant_fails(const WheelParams& p, double tol = kOracleTolerance);
/// D^Q-integral and D^L-integral verdicts: exact spectrum, discriminant
/// test and oracle all agree.
CheckResult check_gw_integrality(const WheelParams& p);

CheckResult check_join_dq(const NamedPart& p1, const NamedPart& p2, double tol = kOracleTolerance);
CheckResult check_join_dl(const NamedPart& p1, const NamedPart& p2, double tol = kOracleTolerance);
/// is_join_dl_integral vs numeric_is_integral(dl_matrix(join)).
CheckResult check_join_dl_integrality(const NamedPart& p1, const NamedPart& p2);

CheckResult check_classification(std::int64_t a_max, std::int64_t m_max);
/// Every sporadic triple the scan reports, confirmed on the constructed matrix.
CheckResult check_sporadic_oracle(std::int64_t a_max, std::int64_t m_max);
CheckResult check_gw1_factor_route(std::int64_t m_max);
CheckResult check_alpha_equivalence(std::int64_t a_lo, std::int64_t a_hi);
CheckResult check_alpha_solution_consistency(std::int64_t a_lo, std::int64_t a_hi);
CheckResult check_bounds(std::int64_t a_lo, std::int64_t a_hi, std::int64_t extra);
CheckResult check_parity(std::size_t count, std::uint64_t seed, std::int64_t max_value = 1000);
CheckResult check_enumeration_methods_agree(std::int64_t a_max, std::int64_t m_max);

/// Runs `fn(i)` for i in [0, count) on up to `threads` workers; results are
/// stored by index, so output order never depends on scheduling.
std::vector<CheckResult> run_checks(std::size_t count, unsigned threads,
                                    const std::function<CheckResult(std::size_t)>& fn);

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"join-dq",        "join-dl",     "gw-dq",  "gw-dl",
                                                 "classification", "alpha-equiv", "parity", "bounds"};
  return names;
}

/// Throws invalid_parameter for an unknown suite or a max_order below 4 on
/// suites that build matrices.
VerifyRecord run_suite(const std::string& suite, const VerifyOptions& options);

}  // namespace gwspec
