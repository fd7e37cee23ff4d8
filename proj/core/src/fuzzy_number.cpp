#include "fuzzfrac/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <utility>

#include "fuzzfrac/errors.hpp"

namespace fuzzfrac {
namespace {

// Neighbouring λ values closer than this are treated as one grid point.
constexpr double kLevelMergeGap = 1e-14;

std::string describe_lambda(double lambda) {
  std::ostringstream os;
  os.precision(17);
  os << lambda;
  return os.str();
}

// Linear interpolation of a profile sampled on `levels` at λ.
double interpolate(std::span<const double> levels, std::span<const double> values,
                   double lambda) noexcept {
  const auto it = std::lower_bound(levels.begin(), levels.end(), lambda);
  if (it == levels.end()) return values.back();
  const auto k = static_cast<std::size_t>(it - levels.begin());
  if (*it == lambda || k == 0) return values[k];
  const double t = (lambda - levels[k - 1]) / (levels[k] - levels[k - 1]);
  return values[k - 1] + t * (values[k] - values[k - 1]);
}

std::vector<double> resample_values(const LambdaGrid& from, std::span<const double> values,
                                    const LambdaGrid& to) {
  std::vector<double> out(to.size());
  for (std::size_t k = 0; k < to.size(); ++k) {
    out[k] = interpolate(from.levels(), values, to[k]);
  }
  return out;
}

// Index of the first λ at which (lo, hi) breaks monotonicity or nesting.
std::optional<std::size_t> first_violation(std::span<const double> lo,
                                           std::span<const double> hi) noexcept {
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (!std::isfinite(lo[k]) || !std::isfinite(hi[k])) return k;
    if (lo[k] > hi[k] + profile_tolerance(lo[k], hi[k])) return k;
    if (k > 0) {
      if (lo[k] < lo[k - 1] - profile_tolerance(lo[k], lo[k - 1])) return k;
      if (hi[k] > hi[k - 1] + profile_tolerance(hi[k], hi[k - 1])) return k;
    }
  }
  return std::nullopt;
}

void require_grid_intervals(std::size_t intervals) {
  if (intervals == 0) {
    throw Error(ErrorCode::InvalidArgument, "λ-grid needs at least one interval");
  }
}

}  // namespace

double profile_tolerance(double a, double b) noexcept {
  return kProfileTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

// ---------------------------------------------------------------------------
// LambdaGrid

LambdaGrid LambdaGrid::uniform(std::size_t intervals) {
  require_grid_intervals(intervals);
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const std::vector<double>>> cache;

  std::lock_guard lock(mutex);
  auto& slot = cache[intervals];
  if (!slot) {
    std::vector<double> levels(intervals + 1);
    for (std::size_t k = 0; k <= intervals; ++k) {
      levels[k] = static_cast<double>(k) / static_cast<double>(intervals);
    }
    levels.back() = 1.0;
    slot = std::make_shared<const std::vector<double>>(std::move(levels));
  }
  return LambdaGrid(slot);
}

LambdaGrid LambdaGrid::from_levels(std::vector<double> levels) {
  if (levels.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "λ-grid needs at least the points 0 and 1");
  }
  for (double l : levels) {
    if (!(l >= 0.0 && l <= 1.0)) {
      throw Error(ErrorCode::LambdaOutOfRange, "λ = " + describe_lambda(l));
    }
  }
  if (levels.front() != 0.0 || levels.back() != 1.0) {
    throw Error(ErrorCode::InvalidArgument, "λ-grid must start at 0 and end at 1");
  }
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (!(levels[k] > levels[k - 1])) {
      throw Error(ErrorCode::InvalidArgument, "λ-grid must be strictly increasing");
    }
  }
  return LambdaGrid(std::make_shared<const std::vector<double>>(std::move(levels)));
}

LambdaGrid LambdaGrid::merge(const LambdaGrid& a, const LambdaGrid& b) {
  if (a == b) return a;
  std::vector<double> all;
  all.reserve(a.size() + b.size());
  std::merge(a.levels().begin(), a.levels().end(), b.levels().begin(), b.levels().end(),
             std::back_inserter(all));
  std::vector<double> merged;
  merged.reserve(all.size());
  for (double l : all) {
    if (merged.empty() || l - merged.back() > kLevelMergeGap) merged.push_back(l);
  }
  merged.back() = 1.0;
  return LambdaGrid(std::make_shared<const std::vector<double>>(std::move(merged)));
}

bool operator==(const LambdaGrid& a, const LambdaGrid& b) noexcept {
  return a.levels_ == b.levels_ || *a.levels_ == *b.levels_;
}

// ---------------------------------------------------------------------------
// FuzzyNumber

FuzzyNumber::FuzzyNumber(LambdaGrid grid, std::vector<double> lo, std::vector<double> hi)
    : grid_(std::move(grid)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != grid_.size() || hi_.size() != grid_.size()) {
    throw Error(ErrorCode::InvalidProfile,
                "endpoint lists must have one entry per λ-grid point");
  }
  if (const auto k = first_violation(lo_, hi_)) {
    throw Error(ErrorCode::InvalidProfile,
                "level sets are not nested at λ = " + describe_lambda(grid_[*k]));
  }
}

FuzzyNumber::FuzzyNumber(Unchecked, LambdaGrid grid, std::vector<double> lo,
                         std::vector<double> hi) noexcept
    : grid_(std::move(grid)), lo_(std::move(lo)), hi_(std::move(hi)) {}

FuzzyNumber FuzzyNumber::triangular(double center, double left_spread, double right_spread,
                                    std::size_t grid_intervals) {
  if (left_spread < 0.0 || right_spread < 0.0) {
    throw Error(ErrorCode::NegativeSpread, "triangular spreads must be nonnegative");
  }
  if (!std::isfinite(center) || !std::isfinite(left_spread) ||
      !std::isfinite(right_spread)) {
    throw Error(ErrorCode::InvalidArgument, "triangular parameters must be finite");
  }
  auto grid = LambdaGrid::uniform(grid_intervals);
  std::vector<double> lo(grid.size());
  std::vector<double> hi(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double w = 1.0 - grid[k];
    lo[k] = center - left_spread * w;
    hi[k] = center + right_spread * w;
  }
  return FuzzyNumber(std::move(grid), std::move(lo), std::move(hi));
}

FuzzyNumber FuzzyNumber::trapezoidal(double a, double b, double c, double d,
                                     std::size_t grid_intervals) {
  if (b < a || d < c) {
    throw Error(ErrorCode::NegativeSpread, "trapezoid support must contain its core");
  }
  if (c < b) {
    throw Error(ErrorCode::InvalidProfile, "trapezoid core must satisfy b <= c");
  }
  auto grid = LambdaGrid::uniform(grid_intervals);
  std::vector<double> lo(grid.size());
  std::vector<double> hi(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double l = grid[k];
    lo[k] = a + (b - a) * l;
    hi[k] = d - (d - c) * l;
  }
  return FuzzyNumber(std::move(grid), std::move(lo), std::move(hi));
}

FuzzyNumber FuzzyNumber::crisp(double value, std::size_t grid_intervals) {
  return triangular(value, 0.0, 0.0, grid_intervals);
}

FuzzyNumber FuzzyNumber::zero(std::size_t grid_intervals) {
  return crisp(0.0, grid_intervals);
}

FuzzyNumber FuzzyNumber::from_breakpoints(std::vector<Breakpoint> breakpoints,
                                          std::size_t grid_intervals) {
  if (breakpoints.empty()) {
    throw Error(ErrorCode::InvalidProfile, "no level breakpoints given");
  }
  std::sort(breakpoints.begin(), breakpoints.end(),
            [](const Breakpoint& a, const Breakpoint& b) { return a.lambda < b.lambda; });
  std::vector<double> levels;
  std::vector<double> lo;
  std::vector<double> hi;
  for (const auto& bp : breakpoints) {
    if (!levels.empty() && bp.lambda == levels.back()) {
      throw Error(ErrorCode::InvalidProfile,
                  "duplicate breakpoint at λ = " + describe_lambda(bp.lambda));
    }
    levels.push_back(bp.lambda);
    lo.push_back(bp.lo);
    hi.push_back(bp.hi);
  }
  if (levels.front() != 0.0 || levels.back() != 1.0) {
    throw Error(ErrorCode::InvalidProfile, "breakpoints must include λ = 0 and λ = 1");
  }
  auto source = LambdaGrid::from_levels(levels);
  auto grid = LambdaGrid::merge(LambdaGrid::uniform(grid_intervals), source);
  auto lo_r = resample_values(source, lo, grid);
  auto hi_r = resample_values(source, hi, grid);
  return FuzzyNumber(std::move(grid), std::move(lo_r), std::move(hi_r));
}

Interval FuzzyNumber::level(double lambda) const {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::LambdaOutOfRange, "λ = " + describe_lambda(lambda));
  }
  return {interpolate(grid_.levels(), lo_, lambda), interpolate(grid_.levels(), hi_, lambda)};
}

double FuzzyNumber::level_length(double lambda) const {
  return level(lambda).length();
}

FuzzyNumber FuzzyNumber::resampled(const LambdaGrid& grid) const {
  if (grid == grid_) return *this;
  return FuzzyNumber(Unchecked{}, grid, resample_values(grid_, lo_, grid),
                     resample_values(grid_, hi_, grid));
}

// ---------------------------------------------------------------------------
// Arithmetic

FuzzyNumber combine(double a, const FuzzyNumber& u, double b, const FuzzyNumber& v) {
  if (a < 0.0 || b < 0.0) {
    throw Error(ErrorCode::NegativeScalar, "fuzzy scalar factors must be nonnegative");
  }
  if (!(u.grid() == v.grid())) {
    const auto grid = LambdaGrid::merge(u.grid(), v.grid());
    return combine(a, u.resampled(grid), b, v.resampled(grid));
  }
  const std::size_t n = u.grid().size();
  std::vector<double> lo(n);
  std::vector<double> hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = a * u.lo_[k] + b * v.lo_[k];
    hi[k] = a * u.hi_[k] + b * v.hi_[k];
  }
  // Nonnegative weights and monotone rounding keep the invariants exactly.
  return FuzzyNumber(FuzzyNumber::Unchecked{}, u.grid(), std::move(lo), std::move(hi));
}

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
  if (!(u.grid() == v.grid())) {
    const auto grid = LambdaGrid::merge(u.grid(), v.grid());
    return add(u.resampled(grid), v.resampled(grid));
  }
  const std::size_t n = u.grid().size();
  std::vector<double> lo(n);
  std::vector<double> hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = u.lo_[k] + v.lo_[k];
    hi[k] = u.hi_[k] + v.hi_[k];
  }
  return FuzzyNumber(FuzzyNumber::Unchecked{}, u.grid(), std::move(lo), std::move(hi));
}

FuzzyNumber scale(double alpha, const FuzzyNumber& u) {
  if (!(alpha >= 0.0)) {
    throw Error(ErrorCode::NegativeScalar, "scale factor must be nonnegative");
  }
  const std::size_t n = u.grid().size();
  std::vector<double> lo(n);
  std::vector<double> hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = alpha * u.lo_[k];
    hi[k] = alpha * u.hi_[k];
  }
  return FuzzyNumber(FuzzyNumber::Unchecked{}, u.grid(), std::move(lo), std::move(hi));
}

FuzzyNumber hukuhara_diff(const FuzzyNumber& u, const FuzzyNumber& v) {
  if (!(u.grid() == v.grid())) {
    const auto grid = LambdaGrid::merge(u.grid(), v.grid());
    return hukuhara_diff(u.resampled(grid), v.resampled(grid));
  }
  const std::size_t n = u.grid().size();
  std::vector<double> lo(n);
  std::vector<double> hi(n);
  const auto ul = u.lower();
  const auto uh = u.upper();
  const auto vl = v.lower();
  const auto vh = v.upper();
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = ul[k] - vl[k];
    hi[k] = uh[k] - vh[k];
  }
  if (const auto k = first_violation(lo, hi)) {
    throw Error(ErrorCode::HukuharaNotExist,
                "difference is not a fuzzy number at λ = " + describe_lambda(u.grid()[*k]));
  }
  return FuzzyNumber(u.grid(), std::move(lo), std::move(hi));
}

double d_inf(const FuzzyNumber& u, const FuzzyNumber& v) {
  if (!(u.grid() == v.grid())) {
    const auto grid = LambdaGrid::merge(u.grid(), v.grid());
    return d_inf(u.resampled(grid), v.resampled(grid));
  }
  const auto ul = u.lower();
  const auto uh = u.upper();
  const auto vl = v.lower();
  const auto vh = v.upper();
  double d = 0.0;
  for (std::size_t k = 0; k < ul.size(); ++k) {
    d = std::max({d, std::abs(ul[k] - vl[k]), std::abs(uh[k] - vh[k])});
  }
  return d;
}

double d_inf_zero(const FuzzyNumber& u) noexcept {
  double d = 0.0;
  for (double x : u.lower()) d = std::max(d, std::abs(x));
  for (double x : u.upper()) d = std::max(d, std::abs(x));
  return d;
}

}  // namespace fuzzfrac
