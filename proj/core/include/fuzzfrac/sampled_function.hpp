#ifndef FUZZFRAC_SAMPLED_FUNCTION_HPP
#define FUZZFRAC_SAMPLED_FUNCTION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzfrac/fuzzy_number.hpp"

namespace fuzzfrac {

class FuzzyDataSet;

// A fuzzy-valued function sampled on a strictly increasing grid. Between
// samples it is the levelwise linear interpolation of the bracketing values,
// which keeps every value a valid fuzzy number.
class SampledFuzzyFunction {
 public:
  SampledFuzzyFunction(std::vector<double> grid, std::vector<FuzzyNumber> values);

  std::span<const double> grid() const noexcept { return grid_; }
  std::span<const FuzzyNumber> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return grid_.size(); }
  Interval domain() const noexcept { return {grid_.front(), grid_.back()}; }

  // Throws Error{XOutOfRange} outside the grid's span.
  FuzzyNumber evaluate(double x) const;

 private:
  std::vector<double> grid_;
  std::vector<FuzzyNumber> values_;
};

// `density` uniform steps inside every subinterval; every node is a grid
// point, exactly. Total size density·n + 1.
std::vector<double> node_aligned_grid(const FuzzyDataSet& data, std::size_t density);

// Levelwise piecewise-linear interpolant of the data on a node-aligned grid.
SampledFuzzyFunction node_interpolant(const FuzzyDataSet& data, std::size_t density);

// D(φ, ψ) = max over grid points of d_∞(φ(x), ψ(x)). Functions on different
// grids are compared on the union of both grids inside the common domain.
double metric_D(const SampledFuzzyFunction& phi, const SampledFuzzyFunction& psi);

// D(φ, 𝟎).
double distance_to_zero(const SampledFuzzyFunction& phi) noexcept;

// Level curves (x, f⁻(λ)) and (x, f⁺(λ)) for each requested λ.
struct LevelTable {
  std::vector<double> lambdas;
  std::vector<double> x;
  // bands[l][k] = [f⁻(λ_l), f⁺(λ_l)] at x[k].
  std::vector<std::vector<Interval>> bands;
};

// Throws Error{LambdaOutOfRange}.
LevelTable export_level_sets(const SampledFuzzyFunction& phi,
                             std::span<const double> lambdas);

}  // namespace fuzzfrac

#endif  // FUZZFRAC_SAMPLED_FUNCTION_HPP
