#include "gwspec/integrality.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace gwspec {

namespace {

std::vector<wide_int> divisors(wide_int v) {
  std::vector<wide_int> small, large;
  for (wide_int d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::string triple_string(const WheelParams& p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

}  // namespace

bool is_rim_integral(std::int64_t n) { return n == 3 || n == 4 || n == 6; }

wide_int dq_discriminant(const WheelParams& p) {
  const auto w = WheelParams::make(p.a, p.m, p.n);
  const wide_int gap = checked_sub(checked_mul(3 * static_cast<wide_int>(w.a) - 2, w.m), 3 * static_cast<wide_int>(w.n) - 6);
  return checked_add(checked_mul(gap, gap), checked_mul(checked_mul(4 * static_cast<wide_int>(w.a), w.m), w.n));
}

DqWitness is_dq_integral(const WheelParams& p) {
  DqWitness w{};
  w.t = dq_discriminant(p);
  w.c = exact_sqrt(w.t);
  w.n_ok = is_rim_integral(p.n);
  w.verdict = w.c.has_value() && w.n_ok;
  return w;
}

bool is_gw_dl_integral(const WheelParams& p) { return is_rim_integral(WheelParams::make(p.a, p.m, p.n).n); }

bool is_join_dl_integral(const RegularPart& p1, const RegularPart& p2) {
  return p1.adjacency.is_integral() && p2.adjacency.is_integral();
}

std::vector<std::int64_t> gw1_square_m_values(std::int64_t n) {
  if (n < 4) throw invalid_parameter("factor-pair search needs n >= 4");
  const wide_int big_n = checked_mul(8 * static_cast<wide_int>(n), n - 3);
  std::vector<std::int64_t> out;
  for (const wide_int x : divisors(big_n)) {
    const wide_int y = big_n / x;
    if (x > y) break;
    if ((x + y) % 2 != 0) continue;
    const wide_int shift = (y - x) / 2;  // |m - n + 6|
    for (const wide_int m : {n - 6 + shift, n - 6 - shift}) {
      if (m >= 1) out.push_back(to_int64(m));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ClassificationResult classify_gw1_dq(std::int64_t m, std::int64_t n) {
  const auto params = WheelParams::make(1, m, n);
  bool square = true;
  if (n >= 4) {
    const auto ms = gw1_square_m_values(n);
    square = std::binary_search(ms.begin(), ms.end(), m);
  }
  const bool verdict = square && is_rim_integral(n);
  ClassificationResult out = classify(params);
  if (out.dq.verdict != verdict) {
    throw std::logic_error("factor-pair and discriminant verdicts disagree at " + triple_string(params));
  }
  return out;
}

std::int64_t m_upper_bound(std::int64_t n) {
  switch (n) {
    case 3: return 2;
    case 4: return 8;
    case 6: return 31;
    default: throw invalid_parameter("m bound is only defined for n in {3, 4, 6}");
  }
}

AlphaCase alpha_case(std::int64_t a, std::int64_t n) {
  if (a < 2) throw invalid_parameter("alpha parametrization requires a >= 2");
  const wide_int aw = a;
  switch (n) {
    case 3: return {3 * (aw - 2), 72 * aw * (aw - 1)};
    case 4: return {2 * (5 * aw - 6), 32 * aw * (7 * aw - 6)};
    case 6: return {24 * (aw - 1), 144 * aw * (5 * aw - 4)};
    default: throw invalid_parameter("alpha parametrization requires n in {3, 4, 6}");
  }
}

std::vector<AlphaSolution> enumerate_alpha_solutions(std::int64_t a, std::int64_t n) {
  const auto [linear, constant] = alpha_case(a, n);
  const wide_int lead = 3 * static_cast<wide_int>(a) - 2;
  const wide_int lead_sq = lead * lead;

  std::vector<AlphaSolution> out;
  // m integral forces alpha | K/2.
  for (const wide_int alpha : divisors(constant / 2)) {
    if (alpha * alpha < constant) continue;
    const wide_int den = 2 * alpha * lead_sq;
    const wide_int sq = alpha * alpha;
    const std::pair<AlphaFamily, wide_int> numerators[] = {
        {AlphaFamily::plus, sq + 2 * alpha * linear - constant},
        {AlphaFamily::minus, -sq + 2 * alpha * linear + constant},
    };
    for (const auto& [family, num] : numerators) {
      if (num <= 0 || num % den != 0) continue;
      const wide_int p_num = sq - constant;
      const wide_int c_num = sq + constant;
      if (p_num % (2 * alpha) != 0 || c_num % (2 * lead * alpha) != 0) {
        throw std::logic_error("alpha solution with non-integral p or c");
      }
      AlphaSolution s{alpha, num / den, family, c_num / (2 * lead * alpha), p_num / (2 * alpha)};
      if (lead * s.c + s.p != alpha) throw std::logic_error("alpha != (3a-2)c + p");
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end(), [](const AlphaSolution& l, const AlphaSolution& r) {
    return std::tie(l.m, l.alpha, l.family) < std::tie(r.m, r.alpha, r.family);
  });
  return out;
}

std::vector<std::int64_t> alpha_m_values(std::int64_t a, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& s : enumerate_alpha_solutions(a, n)) out.push_back(to_int64(s.m));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<WheelParams>& sporadic_dq_triples() {
  static const std::vector<WheelParams> triples = {
      {1, 5, 4},  {1, 5, 6}, {1, 9, 6}, {1, 16, 6}, {1, 35, 6}, {2, 1, 3}, {2, 1, 4}, {3, 1, 4}, {4, 2, 4},
      {3, 4, 4},  {4, 1, 6}, {5, 1, 6}, {11, 1, 6}, {4, 2, 6},  {2, 3, 6}, {5, 3, 6}, {2, 8, 6},
  };
  return triples;
}

std::string case_label(const WheelParams& p) {
  if (p.a == 1 && p.n == 3) return "a=1, n=3, m>=1";
  const auto& table = sporadic_dq_triples();
  if (std::find(table.begin(), table.end(), p) != table.end()) return "sporadic " + triple_string(p);
  return "unlisted " + triple_string(p);
}

ClassificationResult classify(const WheelParams& p) {
  ClassificationResult out{WheelParams::make(p.a, p.m, p.n), is_dq_integral(p), is_gw_dl_integral(p), std::nullopt};
  if (out.dq.verdict) out.matched_case = case_label(out.params);
  return out;
}

DqClassification classify_all_dq(std::int64_t a_max, std::int64_t m_max, const std::vector<std::int64_t>& n_set) {
  if (a_max < 1 || m_max < 1) throw invalid_parameter("grid bounds must be >= 1");
  std::vector<std::int64_t> ns = n_set;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  if (!ns.empty() && ns.front() < 3) throw invalid_parameter("n values must be >= 3");

  DqClassification out{false, {}};
  for (std::int64_t a = 1; a <= a_max; ++a) {
    for (std::int64_t m = 1; m <= m_max; ++m) {
      for (const auto n : ns) {
        if (a == 1 && n == 3) {
          out.infinite_family = true;
          continue;
        }
        const WheelParams p{a, m, n};
        if (is_dq_integral(p).verdict) out.sporadic.push_back(classify(p));
      }
    }
  }
  return out;
}

bool parity_check(std::int64_t a, std::int64_t m, std::int64_t n) {
  const wide_int u = (5 * static_cast<wide_int>(a) - 2) * m + 5 * static_cast<wide_int>(n) - 10;
  const wide_int gap = (3 * static_cast<wide_int>(a) - 2) * m - 3 * static_cast<wide_int>(n) + 6;
  const wide_int t = gap * gap + 4 * static_cast<wide_int>(a) * m * n;
  return floor_mod(u, 2) == floor_mod(t, 2);
}

}  // namespace gwspec
