#include <gtest/gtest.h>

#include <fuzzfrac/fuzzy_number.hpp>

#include "test_support.hpp"

using namespace fuzzfrac;
using testing_support::Rng;
using testing_support::random_fuzzy;

namespace {

constexpr int kCases = 10000;
constexpr double kTol = 1e-12;

::testing::AssertionResult valid_profile(const FuzzyNumber& u) {
  if (testing_support::profile_ok(u, kTol)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "profile is not a fuzzy number";
}

using testing_support::probe_gap;

}  // namespace

TEST(FuzzyProperties, AddPreservesProfilesAndIsLevelwise) {
  Rng rng(101);
  for (int k = 0; k < kCases; ++k) {
    const auto u = random_fuzzy(rng);
    const auto v = random_fuzzy(rng);
    const auto s = add(u, v);
    ASSERT_TRUE(valid_profile(s)) << "case " << k;
    for (double l : s.grid().levels()) {
      const auto a = u.level(l);
      const auto b = v.level(l);
      const auto c = s.level(l);
      ASSERT_NEAR(c.lo, a.lo + b.lo, kTol);
      ASSERT_NEAR(c.hi, a.hi + b.hi, kTol);
    }
    ASSERT_LE(probe_gap(s, add(v, u)), kTol);
  }
}

TEST(FuzzyProperties, ScalePreservesProfilesAndIsLevelwise) {
  Rng rng(202);
  for (int k = 0; k < kCases; ++k) {
    const auto u = random_fuzzy(rng);
    const double a = rng.coin() ? rng.uniform(0.0, 1.0) : rng.uniform(0.0, 5.0);
    const auto s = scale(a, u);
    ASSERT_TRUE(valid_profile(s)) << "case " << k;
    for (double l : s.grid().levels()) {
      ASSERT_NEAR(s.level(l).lo, a * u.level(l).lo, kTol);
      ASSERT_NEAR(s.level(l).hi, a * u.level(l).hi, kTol);
    }
    const double b = rng.uniform(0.0, 2.0);
    const auto v = random_fuzzy(rng);
    const auto c = combine(a, u, b, v);
    ASSERT_TRUE(valid_profile(c));
    ASSERT_LE(probe_gap(c, add(scale(a, u), scale(b, v))), kTol);
  }
}

TEST(FuzzyProperties, HukuharaRoundTrip) {
  Rng rng(303);
  for (int k = 0; k < kCases; ++k) {
    const auto v = random_fuzzy(rng);
    const auto w = random_fuzzy(rng);
    const auto u = add(v, w);
    const auto back = hukuhara_diff(u, v);
    ASSERT_TRUE(valid_profile(back)) << "case " << k;
    ASSERT_LE(probe_gap(back, w), kTol) << "case " << k;
    ASSERT_LE(probe_gap(add(v, back), u), kTol) << "case " << k;
  }
}

TEST(FuzzyProperties, DInfIsAMetric) {
  Rng rng(404);
  for (int k = 0; k < kCases; ++k) {
    const auto u = random_fuzzy(rng);
    const auto v = random_fuzzy(rng);
    const auto w = random_fuzzy(rng);
    ASSERT_EQ(d_inf(u, u), 0.0);
    ASSERT_EQ(d_inf(u, v), d_inf(v, u));
    ASSERT_GE(d_inf(u, v), 0.0);
    ASSERT_LE(d_inf(u, w), d_inf(u, v) + d_inf(v, w) + kTol);
    ASSERT_NEAR(d_inf(u, v), probe_gap(u, v), kTol);
    if (probe_gap(u, v) > 0.0) ASSERT_GT(d_inf(u, v), 0.0);
    // Translation invariance and homogeneity.
    ASSERT_NEAR(d_inf(add(u, w), add(v, w)), d_inf(u, v), 1e-11);
    const double a = rng.uniform(0.0, 3.0);
    ASSERT_NEAR(d_inf(scale(a, u), scale(a, v)), a * d_inf(u, v), 1e-11);
  }
}
