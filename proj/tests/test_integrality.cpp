#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gwspec/integrality.hpp"
#include "gwspec/spectra.hpp"

using namespace gwspec;

namespace {

// The discriminant written out directly, for comparison.
wide_int discriminant_by_hand(std::int64_t a, std::int64_t m, std::int64_t n) {
  const wide_int g = (3 * static_cast<wide_int>(a) - 2) * m - 3 * n + 6;
  return g * g + 4 * static_cast<wide_int>(a) * m * n;
}

std::vector<std::int64_t> scan_m(std::int64_t a, std::int64_t n, std::int64_t m_max) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    if (is_perfect_square(discriminant_by_hand(a, m, n))) out.push_back(m);
  }
  return out;
}

}  // namespace

TEST(Integrality, RimCondition) {
  for (std::int64_t n = 3; n <= 40; ++n) EXPECT_EQ(is_rim_integral(n), n == 3 || n == 4 || n == 6) << n;
}

TEST(Integrality, DiscriminantAndWitness) {
  EXPECT_EQ(dq_discriminant({2, 8, 6}), 784);
  const auto w = is_dq_integral({2, 8, 6});
  EXPECT_TRUE(w.verdict);
  EXPECT_EQ(w.c.value(), 28);
  EXPECT_TRUE(w.n_ok);

  const auto off_rim = is_dq_integral({1, 7, 5});  // square t, but C5 rim
  EXPECT_TRUE(off_rim.c.has_value());
  EXPECT_FALSE(off_rim.n_ok);
  EXPECT_FALSE(off_rim.verdict);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> d(1, 5000);
  for (int i = 0; i < 5000; ++i) {
    const auto a = d(rng), m = d(rng), n = d(rng) + 2;
    ASSERT_EQ(dq_discriminant({a, m, n}), discriminant_by_hand(a, m, n));
  }
}

TEST(Integrality, VerdictMatchesExactSpectrum) {
  for (std::int64_t a = 1; a <= 6; ++a) {
    for (std::int64_t m = 1; m <= 12; ++m) {
      for (std::int64_t n = 3; n <= 12; ++n) {
        const WheelParams p{a, m, n};
        EXPECT_EQ(is_dq_integral(p).verdict, gw_dq_spectrum(p).is_integral());
        EXPECT_EQ(is_gw_dl_integral(p), gw_dl_spectrum(p).is_integral());
      }
    }
  }
}

TEST(Integrality, JoinDlIntegrality) {
  for (std::int64_t p = 1; p <= 8; ++p) {
    EXPECT_FALSE(is_join_dl_integral(complete_part(p), cycle_part(5)));
    EXPECT_TRUE(is_join_dl_integral(complete_part(p), cycle_part(6)));
  }
  EXPECT_TRUE(is_join_dl_integral(copies_part(3, 2), cycle_part(4)));
  EXPECT_FALSE(is_join_dl_integral(cycle_part(8), copies_part(2, 2)));
}

TEST(Integrality, FactorPairRouteForA1) {
  EXPECT_EQ(gw1_square_m_values(4), (std::vector<std::int64_t>{5}));
  EXPECT_EQ(gw1_square_m_values(5), (std::vector<std::int64_t>{7, 18}));
  EXPECT_EQ(gw1_square_m_values(6), (std::vector<std::int64_t>{5, 9, 16, 35}));
  EXPECT_THROW(gw1_square_m_values(3), invalid_parameter);
  for (std::int64_t n = 4; n <= 30; ++n) {
    // m - n + 6 <= 2n(n-3) - 1 for every square, so this scan is exhaustive.
    EXPECT_EQ(gw1_square_m_values(n), scan_m(1, n, 2 * n * n + 10)) << n;
  }
}

TEST(Integrality, AlphaConstantsFollowFromTheGeneralForm) {
  for (std::int64_t a = 2; a <= 60; ++a) {
    for (const std::int64_t n : {3, 4, 6}) {
      const wide_int lead = 3 * static_cast<wide_int>(a) - 2;
      const wide_int b = lead * (3 * n - 6) - 2 * static_cast<wide_int>(a) * n;
      const wide_int c = static_cast<wide_int>(3 * n - 6) * (3 * n - 6);
      const auto k = alpha_case(a, n);
      EXPECT_EQ(k.linear, b);
      EXPECT_EQ(k.constant, lead * lead * c - b * b);
      // t(m) = lead^2 m^2 - 2Bm + C reproduces the discriminant.
      for (std::int64_t m = 1; m <= 5; ++m) EXPECT_EQ(lead * lead * m * m - 2 * b * m + c, discriminant_by_hand(a, m, n));
    }
  }
  EXPECT_THROW(alpha_case(1, 4), invalid_parameter);
  EXPECT_THROW(alpha_case(2, 5), invalid_parameter);
}

TEST(Integrality, AlphaRouteMatchesBruteForce) {
  EXPECT_EQ(m_upper_bound(3), 2);
  EXPECT_EQ(m_upper_bound(4), 8);
  EXPECT_EQ(m_upper_bound(6), 31);
  for (std::int64_t a = 2; a <= 40; ++a) {
    for (const std::int64_t n : {3, 4, 6}) {
      EXPECT_EQ(alpha_m_values(a, n), scan_m(a, n, 400)) << a << "," << n;
    }
  }
  const auto sols = enumerate_alpha_solutions(2, 6);
  ASSERT_FALSE(sols.empty());
  for (const auto& s : sols) {
    EXPECT_EQ(dq_discriminant({2, to_int64(s.m), 6}), s.c * s.c);
    EXPECT_EQ(s.alpha, 4 * s.c + s.p);
  }
}

TEST(Integrality, PublishedTriplesAreIntegral) {
  for (const auto& p : sporadic_dq_triples()) {
    const auto r = classify(p);
    EXPECT_TRUE(r.dq.verdict);
    EXPECT_EQ(r.matched_case.value(), "sporadic (" + std::to_string(p.a) + "," + std::to_string(p.m) + "," +
                                          std::to_string(p.n) + ")");
  }
  EXPECT_EQ(classify({1, 20, 3}).matched_case.value(), "a=1, n=3, m>=1");
  EXPECT_FALSE(classify({3, 3, 4}).matched_case.has_value());
}

TEST(Integrality, TwoTriplesMissingFromThePublishedList) {
  // Both have square discriminants and an admissible rim.
  for (const WheelParams p : {WheelParams{3, 9, 6}, WheelParams{6, 1, 4}}) {
    const auto r = classify(p);
    EXPECT_TRUE(r.dq.verdict);
    EXPECT_TRUE(gw_dq_spectrum(p).is_integral());
    EXPECT_EQ(r.matched_case.value().rfind("unlisted", 0), 0u);
  }
  EXPECT_EQ(is_dq_integral({3, 9, 6}).c.value(), 57);
  EXPECT_EQ(is_dq_integral({6, 1, 4}).c.value(), 14);
}

TEST(Integrality, GridScan) {
  const auto all = classify_all_dq(11, 35, {3, 4, 6});
  EXPECT_TRUE(all.infinite_family);
  EXPECT_EQ(all.sporadic.size(), 19u);
  EXPECT_TRUE(std::is_sorted(all.sporadic.begin(), all.sporadic.end(),
                             [](const auto& x, const auto& y) { return x.params < y.params; }));
  const auto small = classify_all_dq(50, 2, {3});
  ASSERT_EQ(small.sporadic.size(), 1u);
  EXPECT_EQ(small.sporadic[0].params, (WheelParams{2, 1, 3}));
}

TEST(Integrality, Parity) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(1, 100000);
  for (int i = 0; i < 100000; ++i) ASSERT_TRUE(parity_check(d(rng), d(rng), d(rng) + 2));
}
