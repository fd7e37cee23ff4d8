#include <gtest/gtest.h>

#include <cmath>

#include <fuzzfrac/errors.hpp>
#include <fuzzfrac/fuzzy_number.hpp>

#include "oracles.hpp"

using namespace fuzzfrac;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no fuzzfrac::Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(LambdaGrid, UniformHasEndpointsAndSharesStorage) {
  const auto g = LambdaGrid::uniform(4);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g[0], 0.0);
  EXPECT_EQ(g[2], 0.5);
  EXPECT_EQ(g[4], 1.0);
  EXPECT_EQ(g.levels().data(), LambdaGrid::uniform(4).levels().data());
  EXPECT_EQ(code_of([] { LambdaGrid::uniform(0); }), ErrorCode::InvalidArgument);
}

TEST(LambdaGrid, FromLevelsValidates) {
  EXPECT_NO_THROW(LambdaGrid::from_levels({0.0, 0.3, 1.0}));
  EXPECT_EQ(code_of([] { LambdaGrid::from_levels({0.1, 1.0}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { LambdaGrid::from_levels({0.0, 0.5, 0.5, 1.0}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { LambdaGrid::from_levels({0.0}); }), ErrorCode::InvalidArgument);
}

TEST(LambdaGrid, MergeIsSortedUnion) {
  const auto m = LambdaGrid::merge(LambdaGrid::uniform(2), LambdaGrid::from_levels({0, 0.3, 1}));
  const std::vector<double> expect{0.0, 0.3, 0.5, 1.0};
  EXPECT_TRUE(std::equal(m.levels().begin(), m.levels().end(), expect.begin(), expect.end()));
  EXPECT_TRUE(LambdaGrid::uniform(3) == LambdaGrid::from_levels({0, 1.0 / 3, 2.0 / 3, 1}));
}

TEST(FuzzyNumber, TriangularLevels) {
  const auto u = FuzzyNumber::triangular(5, 3, 1);
  EXPECT_EQ(u.level(0.0), (Interval{2, 6}));
  EXPECT_EQ(u.level(1.0), (Interval{5, 5}));
  const auto mid = u.level(0.5);
  EXPECT_DOUBLE_EQ(mid.lo, 3.5);
  EXPECT_DOUBLE_EQ(mid.hi, 5.5);
  EXPECT_DOUBLE_EQ(u.level_length(0.0), 4.0);
  EXPECT_EQ(u.support(), (Interval{2, 6}));
  EXPECT_EQ(u.core(), (Interval{5, 5}));
}

TEST(FuzzyNumber, LevelBetweenGridPointsIsLinear) {
  const auto u = FuzzyNumber::triangular(0, 1, 1, 2);
  const auto iv = u.level(0.25);
  EXPECT_DOUBLE_EQ(iv.lo, -0.75);
  EXPECT_DOUBLE_EQ(iv.hi, 0.75);
}

TEST(FuzzyNumber, RejectsInvalidInput) {
  EXPECT_EQ(code_of([] { FuzzyNumber::triangular(1, -0.1, 1); }), ErrorCode::NegativeSpread);
  EXPECT_EQ(code_of([] { FuzzyNumber::trapezoidal(0, 2, 1, 3); }), ErrorCode::InvalidProfile);
  EXPECT_EQ(code_of([] { FuzzyNumber::trapezoidal(1, 0, 2, 3); }), ErrorCode::NegativeSpread);
  EXPECT_EQ(code_of([] { FuzzyNumber::triangular(1, 1, 1).level(1.5); }),
            ErrorCode::LambdaOutOfRange);
  EXPECT_EQ(code_of([] { FuzzyNumber::triangular(1, 1, 1).level(-0.01); }),
            ErrorCode::LambdaOutOfRange);
  const auto g = LambdaGrid::uniform(2);
  EXPECT_EQ(code_of([&] { FuzzyNumber(g, {0, 1, 0.5}, {3, 2, 1}); }), ErrorCode::InvalidProfile);
  EXPECT_EQ(code_of([&] { FuzzyNumber(g, {0, 1, 2}, {3, 2, 1.5}); }), ErrorCode::InvalidProfile);
  EXPECT_EQ(code_of([&] { FuzzyNumber(g, {0, 1}, {3, 2}); }), ErrorCode::InvalidProfile);
}

TEST(FuzzyNumber, InvalidProfileNamesTheLevel) {
  try {
    FuzzyNumber(LambdaGrid::uniform(2), {0, 3, 3}, {4, 2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("0.5"), std::string::npos) << e.what();
  }
}

TEST(FuzzyNumber, ToleratesRoundingNoise) {
  EXPECT_NO_THROW(FuzzyNumber(LambdaGrid::uniform(1), {1.0, 1.0 - 1e-14}, {2.0, 2.0}));
}

TEST(FuzzyNumber, TrapezoidalAndCrisp) {
  const auto t = FuzzyNumber::trapezoidal(0, 1, 2, 4);
  EXPECT_EQ(t.support(), (Interval{0, 4}));
  EXPECT_EQ(t.core(), (Interval{1, 2}));
  const auto c = FuzzyNumber::crisp(3.5);
  EXPECT_EQ(c.support(), (Interval{3.5, 3.5}));
  EXPECT_EQ(d_inf_zero(FuzzyNumber::zero()), 0.0);
}

TEST(FuzzyNumber, FromBreakpointsKeepsKinks) {
  const auto u = FuzzyNumber::from_breakpoints({{0, 0, 10}, {0.3, 2, 9}, {1, 4, 4}}, 4);
  const auto iv = u.level(0.3);
  EXPECT_DOUBLE_EQ(iv.lo, 2.0);
  EXPECT_DOUBLE_EQ(iv.hi, 9.0);
  EXPECT_EQ(code_of([] { FuzzyNumber::from_breakpoints({{0, 0, 1}}); }),
            ErrorCode::InvalidProfile);
}

TEST(Arithmetic, AddScaleCombine) {
  const auto u = FuzzyNumber::triangular(2, 1, 1);
  const auto v = FuzzyNumber::triangular(3, 2, 0.5);
  const auto s = add(u, v);
  EXPECT_EQ(s.level(0.0), (Interval{2, 6.5}));
  EXPECT_EQ(s.level(1.0), (Interval{5, 5}));
  const auto k = scale(2.0, v);
  EXPECT_EQ(k.level(0.0), (Interval{2, 7}));
  EXPECT_EQ(code_of([&] { scale(-1.0, u); }), ErrorCode::NegativeScalar);
  const auto c = combine(0.5, u, 2.0, v);
  EXPECT_NEAR(d_inf(c, add(scale(0.5, u), scale(2.0, v))), 0.0, 1e-15);
  EXPECT_EQ(code_of([&] { combine(-0.5, u, 1.0, v); }), ErrorCode::NegativeScalar);
}

TEST(Arithmetic, MismatchedGridsUseUnion) {
  const auto u = FuzzyNumber::triangular(0, 1, 1, 2);
  const auto v = FuzzyNumber::from_breakpoints({{0, 0, 2}, {0.3, 0.5, 1.5}, {1, 1, 1}}, 2);
  const auto s = add(u, v);
  EXPECT_EQ(s.grid().size(), 4u);
  const auto iv = s.level(0.3);
  EXPECT_DOUBLE_EQ(iv.lo, -0.7 + 0.5);
  EXPECT_DOUBLE_EQ(iv.hi, 0.7 + 1.5);
}

TEST(Arithmetic, HukuharaDifference) {
  const auto u = FuzzyNumber::triangular(5, 3, 3);
  const auto v = FuzzyNumber::triangular(2, 1, 2);
  const auto w = hukuhara_diff(u, v);
  EXPECT_EQ(w.level(0.0), (Interval{1, 4}));
  EXPECT_NEAR(d_inf(add(v, w), u), 0.0, 1e-14);
  // Wider subtrahend: no Hukuhara difference.
  EXPECT_EQ(code_of([&] { hukuhara_diff(v, u); }), ErrorCode::HukuharaNotExist);
}

TEST(Arithmetic, DInfMatchesDenseBruteForce) {
  const oracle::Tri a{2, 2, 2};
  const oracle::Tri b{3, 1, 1};
  const double brute = oracle::dense_d_inf([&](double l) { return oracle::tri_level(a, l); },
                                           [&](double l) { return oracle::tri_level(b, l); });
  EXPECT_NEAR(d_inf(FuzzyNumber::triangular(2, 2, 2), FuzzyNumber::triangular(3, 1, 1)), brute,
              1e-12);
  EXPECT_DOUBLE_EQ(brute, 2.0);
  EXPECT_DOUBLE_EQ(d_inf_zero(FuzzyNumber::triangular(5, 3, 3)), 8.0);
}

TEST(Arithmetic, ResampledPreservesLinearProfiles) {
  const auto u = FuzzyNumber::triangular(1, 2, 3, 3);
  const auto r = u.resampled(LambdaGrid::uniform(7));
  EXPECT_EQ(r.grid().size(), 8u);
  EXPECT_NEAR(d_inf(u, r), 0.0, 1e-15);
}
