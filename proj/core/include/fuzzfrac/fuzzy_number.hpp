#ifndef FUZZFRAC_FUZZY_NUMBER_HPP
#define FUZZFRAC_FUZZY_NUMBER_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace fuzzfrac {

// Number of λ-grid intervals used when none is specified.
inline constexpr std::size_t kDefaultLambdaIntervals = 64;

// Absolute floor of the tolerance used when checking monotonicity and
// nesting of level profiles. Scaled up by the magnitude of the compared
// endpoints.
inline constexpr double kProfileTolerance = 1e-12;

double profile_tolerance(double a, double b) noexcept;

// A closed interval [lo, hi]; one λ-cut of a fuzzy number.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const noexcept { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Strictly increasing λ values in [0,1] that always contain 0 and 1.
// Copies share storage; uniform grids of equal size share one instance.
class LambdaGrid {
 public:
  // `intervals` ≥ 1 uniform steps, i.e. intervals + 1 points.
  static LambdaGrid uniform(std::size_t intervals = kDefaultLambdaIntervals);
  static LambdaGrid from_levels(std::vector<double> levels);
  // Sorted union of both grids.
  static LambdaGrid merge(const LambdaGrid& a, const LambdaGrid& b);

  std::span<const double> levels() const noexcept { return *levels_; }
  std::size_t size() const noexcept { return levels_->size(); }
  double operator[](std::size_t k) const noexcept { return (*levels_)[k]; }

  friend bool operator==(const LambdaGrid& a, const LambdaGrid& b) noexcept;

 private:
  explicit LambdaGrid(std::shared_ptr<const std::vector<double>> levels)
      : levels_(std::move(levels)) {}

  std::shared_ptr<const std::vector<double>> levels_;
};

// A fuzzy real number given by its left and right level endpoint functions
// u⁻(λ), u⁺(λ) sampled on a λ-grid. Between grid points both endpoint
// functions are taken to be linear. Immutable once constructed.
class FuzzyNumber {
 public:
  // Validates lo nondecreasing, hi nonincreasing, lo ≤ hi at every λ
  // (within profile_tolerance). Throws Error{InvalidProfile} otherwise.
  FuzzyNumber(LambdaGrid grid, std::vector<double> lo, std::vector<double> hi);

  // lo(λ) = center − left·(1−λ), hi(λ) = center + right·(1−λ).
  static FuzzyNumber triangular(double center, double left_spread,
                                double right_spread,
                                std::size_t grid_intervals = kDefaultLambdaIntervals);
  // Support [a, d], core [b, c]; requires a ≤ b ≤ c ≤ d.
  static FuzzyNumber trapezoidal(double a, double b, double c, double d,
                                 std::size_t grid_intervals = kDefaultLambdaIntervals);
  static FuzzyNumber crisp(double value,
                           std::size_t grid_intervals = kDefaultLambdaIntervals);
  static FuzzyNumber zero(std::size_t grid_intervals = kDefaultLambdaIntervals);

  struct Breakpoint {
    double lambda;
    double lo;
    double hi;
  };
  // Piecewise-linear profile through explicit (λ, lo, hi) breakpoints. The
  // breakpoints must cover λ = 0 and λ = 1. The result lives on the union of
  // a uniform grid and the breakpoint λs, so no shape information is lost.
  static FuzzyNumber from_breakpoints(std::vector<Breakpoint> breakpoints,
                                      std::size_t grid_intervals = kDefaultLambdaIntervals);

  const LambdaGrid& grid() const noexcept { return grid_; }
  std::span<const double> lower() const noexcept { return lo_; }
  std::span<const double> upper() const noexcept { return hi_; }

  // [u⁻(λ), u⁺(λ)], linearly interpolated between grid points.
  // Throws Error{LambdaOutOfRange} for λ outside [0,1].
  Interval level(double lambda) const;
  double level_length(double lambda) const;

  Interval support() const noexcept { return {lo_.front(), hi_.front()}; }
  Interval core() const noexcept { return {lo_.back(), hi_.back()}; }

  // Same profile expressed on another grid (linear interpolation).
  FuzzyNumber resampled(const LambdaGrid& grid) const;

 private:
  struct Unchecked {};
  FuzzyNumber(Unchecked, LambdaGrid grid, std::vector<double> lo,
              std::vector<double> hi) noexcept;

  friend FuzzyNumber add(const FuzzyNumber&, const FuzzyNumber&);
  friend FuzzyNumber scale(double, const FuzzyNumber&);
  friend FuzzyNumber combine(double, const FuzzyNumber&, double,
                             const FuzzyNumber&);

  LambdaGrid grid_;
  std::vector<double> lo_;
  std::vector<double> hi_;
};

// u ⊕ v, levelwise endpoint sums. Mismatched grids are resampled onto their
// union.
FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v);

// α·u for α ≥ 0. Throws Error{NegativeScalar}.
FuzzyNumber scale(double alpha, const FuzzyNumber& u);

// a·u ⊕ b·v for a, b ≥ 0 in one pass.
FuzzyNumber combine(double a, const FuzzyNumber& u, double b, const FuzzyNumber& v);

// Hukuhara difference u ⊖_H v: the w with u = v ⊕ w. Throws
// Error{HukuharaNotExist} naming the first offending λ when the levelwise
// endpoint differences are not a valid profile.
FuzzyNumber hukuhara_diff(const FuzzyNumber& u, const FuzzyNumber& v);

// sup over λ of max(|u⁻−v⁻|, |u⁺−v⁺|), evaluated on the union grid. Exact for
// profiles that are linear between grid points.
double d_inf(const FuzzyNumber& u, const FuzzyNumber& v);

// d_inf to the fuzzy zero.
double d_inf_zero(const FuzzyNumber& u) noexcept;

}  // namespace fuzzfrac

#endif  // FUZZFRAC_FUZZY_NUMBER_HPP
