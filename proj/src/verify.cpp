#include "gwspec/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "gwspec/integrality.hpp"
#include "gwspec/oracle.hpp"

namespace gwspec {

namespace {

std::string triple(const WheelParams& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

// Runs a check body, turning any exception into a failed check.
template <typename F>
CheckResult guarded(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return CheckResult{name, false, std::string("exception: ") + e.what()};
  }
}

bool trace_matches(const Spectrum& s, const IntMatrix& mat, std::string& detail) {
  const std::int64_t trace = mat.trace();
  if (const auto exact = s.exact_sum()) {
    detail += " trace exact";
    return *exact == trace;
  }
  const long double diff = std::fabs(s.numeric_sum() - static_cast<long double>(trace));
  detail += " trace rel " + sci(static_cast<double>(diff / std::max<long double>(1, std::fabs((long double)trace))));
  return diff <= 1e-9L * std::max<long double>(1, std::fabs(static_cast<long double>(trace)));
}

bool oracle_trace_matches(const NumericSpectrum<double>& num, const IntMatrix& mat) {
  long double sum = 0;
  for (const double v : num.values) sum += v;
  const auto trace = static_cast<long double>(mat.trace());
  return std::fabs(sum - trace) <= 1e-8L * (std::fabs(trace) + 1);
}

// D^L checks shared by wheels and joins.
bool laplacian_shape_ok(const Spectrum& exact, const NumericSpectrum<double>& num, double tol, std::string& detail) {
  const bool one_zero = exact.multiplicity_of(ExactEigenvalue::integer(0)) == 1;
  const auto zeros = std::count_if(num.values.begin(), num.values.end(), [](double v) { return std::abs(v) <= 1e-6; });
  const bool psd = num.values.back() >= -tol;
  if (!one_zero) detail += " exact zero multiplicity != 1";
  if (zeros != 1) detail += " oracle zero count " + std::to_string(zeros);
  if (!psd) detail += " negative eigenvalue " + sci(num.values.back());
  return one_zero && zeros == 1 && psd;
}

CheckResult compare_against_matrix(const std::string& name, const Spectrum& exact, const IntMatrix& mat, double tol,
                                   bool laplacian) {
  const auto num = eigenvalues_symmetric(mat);
  const auto rep = compare_spectra(exact, num, tol);
  std::string detail = "max dev " + sci(rep.max_deviation) + ";";
  bool ok = rep.passed;
  if (!trace_matches(exact, mat, detail)) {
    ok = false;
    detail += " (exact trace mismatch)";
  }
  if (!oracle_trace_matches(num, mat)) {
    ok = false;
    detail += " (oracle trace mismatch)";
  }
  if (laplacian && !laplacian_shape_ok(exact, num, tol, detail)) ok = false;
  return CheckResult{name, ok, detail};
}

CheckResult aggregate(const std::string& name, const std::vector<CheckResult>& parts) {
  std::size_t failed = 0;
  std::string failures;
  for (const auto& c : parts) {
    if (c.passed) continue;
    if (++failed <= 5) failures += " [" + c.name + ": " + c.detail + "]";
  }
  std::string detail = std::to_string(parts.size() - failed) + "/" + std::to_string(parts.size()) + " passed";
  if (failed > 0) detail += ";" + failures;
  return CheckResult{name, failed == 0, detail};
}

void require_max_order(const VerifyOptions& options) {
  if (options.max_order < 4) throw invalid_parameter("max-order must be >= 4 for this suite");
}

std::vector<std::pair<std::size_t, std::size_t>> join_pairs(const std::vector<NamedPart>& family,
                                                            std::int64_t max_order, std::uint64_t seed) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (family[i].part.order <= 8 && family[j].part.order <= 8 &&
          family[i].part.order + family[j].part.order <= max_order) {
        out.emplace_back(i, j);
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
  for (std::size_t added = 0, tries = 0; added < 200 && tries < 100000; ++tries) {
    const auto i = pick(rng);
    const auto j = pick(rng);
    if (family[i].part.order + family[j].part.order > max_order) continue;
    out.emplace_back(i, j);
    ++added;
  }
  return out;
}

}  // namespace

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GWSPEC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CheckResult> run_checks(std::size_t count, unsigned threads,
                                    const std::function<CheckResult(std::size_t)>& fn) {
  std::vector<CheckResult> out(count);
  const unsigned workers = std::max(1u, std::min<unsigned>(resolve_thread_count(threads), static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
      });
    }
  }
  return out;
}

NamedPart named_complete(std::int64_t p) {
  return NamedPart{"K" + std::to_string(p), complete(static_cast<std::size_t>(p)), complete_part(p)};
}

NamedPart named_cycle(std::int64_t q) {
  return NamedPart{"C" + std::to_string(q), cycle(static_cast<std::size_t>(q)), cycle_part(q)};
}

NamedPart named_copies(std::int64_t a, std::int64_t m) {
  return NamedPart{std::to_string(a) + "K" + std::to_string(m),
                   copies(static_cast<std::size_t>(a), complete(static_cast<std::size_t>(m))), copies_part(a, m)};
}

std::vector<NamedPart> regular_family(std::int64_t max_order) {
  std::vector<NamedPart> out;
  for (std::int64_t p = 1; p <= max_order; ++p) out.push_back(named_complete(p));
  for (std::int64_t q = 3; q <= max_order; ++q) out.push_back(named_cycle(q));
  for (std::int64_t a = 2; a <= max_order; ++a) {
    for (std::int64_t m = 1; a * m <= max_order; ++m) out.push_back(named_copies(a, m));
  }
  return out;
}

std::vector<WheelParams> wheels_up_to_order(std::int64_t max_order) {
  std::vector<WheelParams> out;
  for (std::int64_t a = 1; a + 3 <= max_order; ++a) {
    for (std::int64_t m = 1; a * m + 3 <= max_order; ++m) {
      for (std::int64_t n = 3; a * m + n <= max_order; ++n) out.push_back({a, m, n});
    }
  }
  return out;
}

std::vector<WheelParams> wheel_grid(std::int64_t a_max, std::int64_t m_max, std::int64_t n_lo, std::int64_t n_hi) {
  std::vector<WheelParams> out;
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t m = 1; m <= m_max; ++m) {
      for (std::int64_t n = n_lo; n <= n_hi; ++n) out.push_back(WheelParams::make(a, m, n));
    }
  }
  return out;
}

std::vector<WheelParams> random_wheels(std::size_t count, std::int64_t max_order, std::uint64_t seed,
                                       const std::vector<WheelParams>& exclude) {
  std::set<WheelParams> seen(exclude.begin(), exclude.end());
  std::vector<WheelParams> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> a_dist(1, std::max<std::int64_t>(1, max_order / 4));
  for (std::size_t tries = 0; out.size() < count && tries < 1000000; ++tries) {
    const auto a = a_dist(rng);
    const auto m_cap = (max_order - 3) / a;
    if (m_cap < 1) continue;
    const auto m = std::uniform_int_distribution<std::int64_t>(1, m_cap)(rng);
    const auto n = std::uniform_int_distribution<std::int64_t>(3, max_order - a * m)(rng);
    const WheelParams p{a, m, n};
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

CheckResult check_gw_dq(const WheelParams& p, double tol) {
  const auto name = "dq " + triple(p);
  return guarded(name, [&] {
    const auto exact = gw_dq_spectrum(p);
    auto result = compare_against_matrix(name, exact, dq_matrix(generalized_wheel(p)), tol, false);
    if (exact != gw_dq_closed_form(p, -2)) {
      result.passed = false;
      result.detail += " (join route and per-family closed form differ)";
    }
    return result;
  });
}

CheckResult check_gw_dl(const WheelParams& p, double tol) {
  const auto name = "dl " + triple(p);
  return guarded(name, [&] {
    const auto exact = gw_dl_spectrum(p);
    auto result = compare_against_matrix(name, exact, dl_matrix(generalized_wheel(p)), tol, true);
    if (exact != dl_join_spectrum(copies_part(p.a, p.m), cycle_part(p.n))) {
      result.passed = false;
      result.detail += " (join route and per-family closed form differ)";
    }
    return result;
  });
}

CheckResult check_plus_two_variant_fails(const WheelParams& p, double tol) {
  const auto name = "+2 variant " + triple(p);
  return guarded(name, [&] {
    if (p.m < 2) throw invalid_parameter("the middle family is empty for m = 1");
    const auto num = eigenvalues_symmetric(dq_matrix(generalized_wheel(p)));
    const auto rep = compare_spectra(gw_dq_closed_form(p, 2), num, tol);
    return CheckResult{name, !rep.passed, "max dev " + sci(rep.max_deviation) + (rep.passed ? " (matched!)" : " (rejected)")};
  });
}

CheckResult check_gw_integrality(const WheelParams& p) {
  const auto name = "integrality " + triple(p);
  return guarded(name, [&] {
    const auto g = generalized_wheel(p);
    const auto witness = is_dq_integral(p);
    const auto dq_exact = gw_dq_spectrum(p);
    const bool dq_numeric = numeric_is_integral(dq_matrix(g));
    const bool dl_claim = is_gw_dl_integral(p);
    const bool dl_exact = gw_dl_spectrum(p).is_integral();
    const bool dl_numeric = numeric_is_integral(dl_matrix(g));
    bool ok = witness.verdict == dq_exact.is_integral() && witness.verdict == dq_numeric && dl_claim == dl_exact &&
              dl_claim == dl_numeric;
    if (witness.c) {
      const wide_int c = *witness.c;
      const wide_int u = (5 * static_cast<wide_int>(p.a) - 2) * p.m + 5 * static_cast<wide_int>(p.n) - 10;
      ok = ok && c * c == witness.t && (u + c) % 2 == 0 &&
           dq_exact.contains(ExactEigenvalue::integer((u + c) / 2)) &&
           dq_exact.contains(ExactEigenvalue::integer((u - c) / 2));
    }
    std::string detail = std::string("dq ") + (witness.verdict ? "integral" : "not") + " (exact " +
                         (dq_exact.is_integral() ? "y" : "n") + ", oracle " + (dq_numeric ? "y" : "n") + "); dl " +
                         (dl_claim ? "integral" : "not") + " (exact " + (dl_exact ? "y" : "n") + ", oracle " +
                         (dl_numeric ? "y" : "n") + ")";
    return CheckResult{name, ok, detail};
  });
}

CheckResult check_join_dq(const NamedPart& p1, const NamedPart& p2, double tol) {
  const auto name = "dq " + p1.name + " v " + p2.name;
  return guarded(name, [&] {
    return compare_against_matrix(name, dq_join_spectrum(p1.part, p2.part), dq_matrix(join(p1.graph, p2.graph)), tol,
                                  false);
  });
}

CheckResult check_join_dl(const NamedPart& p1, const NamedPart& p2, double tol) {
  const auto name = "dl " + p1.name + " v " + p2.name;
  return guarded(name, [&] {
    return compare_against_matrix(name, dl_join_spectrum(p1.part, p2.part), dl_matrix(join(p1.graph, p2.graph)), tol,
                                  true);
  });
}

CheckResult check_join_dl_integrality(const NamedPart& p1, const NamedPart& p2) {
  const auto name = "dl-integral " + p1.name + " v " + p2.name;
  return guarded(name, [&] {
    const bool claim = is_join_dl_integral(p1.part, p2.part);
    const bool exact = dl_join_spectrum(p1.part, p2.part).is_integral();
    const bool numeric = numeric_is_integral(dl_matrix(join(p1.graph, p2.graph)));
    return CheckResult{name, claim == exact && claim == numeric,
                       std::string("claim ") + (claim ? "y" : "n") + ", exact " + (exact ? "y" : "n") + ", oracle " +
                           (numeric ? "y" : "n")};
  });
}

CheckResult check_classification(std::int64_t a_max, std::int64_t m_max) {
  const std::string name = "classification a<=" + std::to_string(a_max) + " m<=" + std::to_string(m_max);
  return guarded(name, [&] {
    const auto scan = classify_all_dq(a_max, m_max, {3, 4, 6});
    std::vector<WheelParams> found;
    for (const auto& r : scan.sporadic) found.push_back(r.params);
    std::vector<WheelParams> expected;
    for (const auto& p : sporadic_dq_triples()) {
      if (p.a <= a_max && p.m <= m_max) expected.push_back(p);
    }
    std::sort(expected.begin(), expected.end());
    std::string detail = std::to_string(found.size()) + " sporadic, expected " + std::to_string(expected.size()) +
                         "; infinite family " + (scan.infinite_family ? "present" : "missing");
    for (const auto& p : found) {
      if (!std::binary_search(expected.begin(), expected.end(), p)) detail += "; unexpected " + triple(p);
    }
    for (const auto& p : expected) {
      if (std::find(found.begin(), found.end(), p) == found.end()) detail += "; missing " + triple(p);
    }
    return CheckResult{name, found == expected && scan.infinite_family, detail};
  });
}

CheckResult check_sporadic_oracle(std::int64_t a_max, std::int64_t m_max) {
  const std::string name = "scanned sporadic triples are D^Q-integral numerically";
  return guarded(name, [&] {
    const auto scan = classify_all_dq(a_max, m_max, {3, 4, 6});
    std::string detail;
    std::size_t bad = 0;
    for (const auto& r : scan.sporadic) {
      if (!numeric_is_integral(dq_matrix(generalized_wheel(r.params))) && ++bad <= 5) detail += " " + triple(r.params);
    }
    return CheckResult{name, bad == 0,
                       std::to_string(scan.sporadic.size() - bad) + "/" + std::to_string(scan.sporadic.size()) +
                           " confirmed" + detail};
  });
}

CheckResult check_gw1_factor_route(std::int64_t m_max) {
  const std::string name = "a=1 factor pairs vs scan, m<=" + std::to_string(m_max);
  return guarded(name, [&] {
    std::size_t mismatches = 0;
    for (std::int64_t n = 3; n <= 12; ++n) {
      for (std::int64_t m = 1; m <= m_max; ++m) {
        const auto r = classify_gw1_dq(m, n);
        if (r.dq.verdict != is_dq_integral({1, m, n}).verdict) ++mismatches;
      }
    }
    return CheckResult{name, mismatches == 0, std::to_string(mismatches) + " mismatches"};
  });
}

CheckResult check_alpha_equivalence(std::int64_t a_lo, std::int64_t a_hi) {
  const std::string name = "alpha vs scan, a in [" + std::to_string(a_lo) + "," + std::to_string(a_hi) + "]";
  return guarded(name, [&] {
    std::size_t mismatches = 0;
    std::string detail;
    for (std::int64_t a = a_lo; a <= a_hi; ++a) {
      for (const std::int64_t n : {3, 4, 6}) {
        std::vector<std::int64_t> scanned;
        for (std::int64_t m = 1; m <= m_upper_bound(n); ++m) {
          if (is_dq_integral({a, m, n}).verdict) scanned.push_back(m);
        }
        if (alpha_m_values(a, n) != scanned) {
          if (++mismatches <= 5) detail += " a=" + std::to_string(a) + ",n=" + std::to_string(n);
        }
      }
    }
    return CheckResult{name, mismatches == 0, std::to_string(mismatches) + " mismatching (a,n)" + detail};
  });
}

CheckResult check_alpha_solution_consistency(std::int64_t a_lo, std::int64_t a_hi) {
  const std::string name = "alpha witnesses, a in [" + std::to_string(a_lo) + "," + std::to_string(a_hi) + "]";
  return guarded(name, [&] {
    std::size_t bad = 0, total = 0;
    for (std::int64_t a = a_lo; a <= a_hi; ++a) {
      const wide_int lead = 3 * static_cast<wide_int>(a) - 2;
      for (const std::int64_t n : {3, 4, 6}) {
        const auto [linear, constant] = alpha_case(a, n);
        for (const auto& s : enumerate_alpha_solutions(a, n)) {
          ++total;
          const wide_int signed_p = s.family == AlphaFamily::plus ? s.p : -s.p;
          const bool ok = s.p >= 0 && s.alpha == lead * s.c + s.p && lead * lead * s.c * s.c - s.p * s.p == constant &&
                          lead * lead * s.m == linear + signed_p &&
                          dq_discriminant({a, to_int64(s.m), n}) == s.c * s.c && (constant / 2) % s.alpha == 0;
          if (!ok) ++bad;
        }
      }
    }
    return CheckResult{name, bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " consistent"};
  });
}

CheckResult check_bounds(std::int64_t a_lo, std::int64_t a_hi, std::int64_t extra) {
  const std::string name = "no D^Q-integral m beyond bound+" + std::to_string(extra) + ", a in [" +
                           std::to_string(a_lo) + "," + std::to_string(a_hi) + "]";
  return guarded(name, [&] {
    std::size_t violations = 0, tested = 0;
    std::string detail;
    for (std::int64_t a = a_lo; a <= a_hi; ++a) {
      for (const std::int64_t n : {3, 4, 6}) {
        const auto bound = m_upper_bound(n);
        for (std::int64_t m = bound + 1; m <= bound + extra; ++m) {
          ++tested;
          if (is_dq_integral({a, m, n}).verdict && ++violations <= 5) detail += " " + triple({a, m, n});
        }
      }
    }
    return CheckResult{name, violations == 0,
                       std::to_string(violations) + " violations in " + std::to_string(tested) + " triples" + detail};
  });
}

CheckResult check_parity(std::size_t count, std::uint64_t seed, std::int64_t max_value) {
  const std::string name = "parity on " + std::to_string(count) + " random triples";
  return guarded(name, [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(1, max_value);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const auto a = dist(rng), m = dist(rng), n = dist(rng);
      if (!parity_check(a, m, n)) ++failures;
    }
    return CheckResult{name, failures == 0, std::to_string(failures) + " failures, seed " + std::to_string(seed)};
  });
}

CheckResult check_enumeration_methods_agree(std::int64_t a_max, std::int64_t m_max) {
  const std::string name = "enumerate scan == alpha, a<=" + std::to_string(a_max) + " m<=" + std::to_string(m_max);
  return guarded(name, [&] {
    const auto scan = enumerate_integral("dq", "scan", a_max, m_max, {3, 4, 6});
    const auto alpha = enumerate_integral("dq", "alpha", a_max, m_max, {3, 4, 6});
    return CheckResult{name, scan.rows == alpha.rows,
                       std::to_string(scan.rows.size()) + " vs " + std::to_string(alpha.rows.size()) + " rows"};
  });
}

VerifyRecord run_suite(const std::string& suite, const VerifyOptions& options) {
  VerifyRecord out{suite, {}};
  const unsigned threads = options.threads;

  if (suite == "gw-dq" || suite == "gw-dl") {
    require_max_order(options);
    const auto wheels = wheels_up_to_order(options.max_order);
    const bool dq = suite == "gw-dq";
    out.checks.push_back(aggregate(dq ? "closed form vs oracle (D^Q)" : "closed form vs oracle (D^L)",
                                   run_checks(wheels.size(), threads, [&](std::size_t i) {
                                     return dq ? check_gw_dq(wheels[i]) : check_gw_dl(wheels[i]);
                                   })));
    out.checks.push_back(aggregate("integrality verdicts: witness, exact spectrum and oracle agree",
                                   run_checks(wheels.size(), threads,
                                              [&](std::size_t i) { return check_gw_integrality(wheels[i]); })));
    if (dq) {
      std::vector<WheelParams> with_middle;
      for (const auto& p : wheels) {
        if (p.m >= 2) with_middle.push_back(p);
      }
      out.checks.push_back(aggregate("(2a-1)m+n+2 variant disagrees with the oracle",
                                     run_checks(with_middle.size(), threads, [&](std::size_t i) {
                                       return check_plus_two_variant_fails(with_middle[i]);
                                     })));
    }
    return out;
  }
  if (suite == "join-dq" || suite == "join-dl") {
    require_max_order(options);
    const auto family = regular_family(options.max_order - 1);
    const auto pairs = join_pairs(family, options.max_order, options.seed);
    const bool dq = suite == "join-dq";
    out.checks.push_back(aggregate(dq ? "join D^Q closed form vs oracle" : "join D^L closed form vs oracle",
                                   run_checks(pairs.size(), threads, [&](std::size_t i) {
                                     const auto& [x, y] = pairs[i];
                                     return dq ? check_join_dq(family[x], family[y]) : check_join_dl(family[x], family[y]);
                                   })));
    if (!dq) {
      out.checks.push_back(aggregate("join D^L-integral iff parts A-integral",
                                     run_checks(pairs.size(), threads, [&](std::size_t i) {
                                       return check_join_dl_integrality(family[pairs[i].first], family[pairs[i].second]);
                                     })));
    }
    return out;
  }
  if (suite == "classification") {
    out.checks.push_back(check_classification(11, 35));
    out.checks.push_back(check_sporadic_oracle(11, 35));
    out.checks.push_back(check_gw1_factor_route(200));
    out.checks.push_back(check_enumeration_methods_agree(11, 35));
    return out;
  }
  if (suite == "alpha-equiv") {
    out.checks.push_back(check_alpha_equivalence(2, 50));
    out.checks.push_back(check_alpha_solution_consistency(2, 50));
    return out;
  }
  if (suite == "parity") {
    out.checks.push_back(check_parity(1000000, options.seed));
    return out;
  }
  if (suite == "bounds") {
    out.checks.push_back(check_bounds(2, 100, 200));
    return out;
  }
  throw invalid_parameter("unknown suite: " + suite);
}

}  // namespace gwspec
