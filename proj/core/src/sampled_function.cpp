#include "fuzzfrac/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzfrac/errors.hpp"
#include "fuzzfrac/rifs.hpp"

namespace fuzzfrac {

SampledFuzzyFunction::SampledFuzzyFunction(std::vector<double> grid,
                                           std::vector<FuzzyNumber> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (grid_.size() < 2 || grid_.size() != values_.size()) {
    throw Error(ErrorCode::SizeMismatch,
                "sampled function needs at least two grid points and one value per point");
  }
  for (std::size_t k = 1; k < grid_.size(); ++k) {
    if (!(grid_[k] > grid_[k - 1])) {
      throw Error(ErrorCode::NotIncreasing, "sample grid must be strictly increasing");
    }
  }
}

FuzzyNumber SampledFuzzyFunction::evaluate(double x) const {
  if (!(x >= grid_.front() && x <= grid_.back())) {
    throw Error(ErrorCode::XOutOfRange, "x = " + std::to_string(x) + " outside [" +
                                            std::to_string(grid_.front()) + ", " +
                                            std::to_string(grid_.back()) + "]");
  }
  const auto it = std::lower_bound(grid_.begin(), grid_.end(), x);
  const auto k = static_cast<std::size_t>(it - grid_.begin());
  if (*it == x) return values_[k];
  const double t = (x - grid_[k - 1]) / (grid_[k] - grid_[k - 1]);
  return combine(1.0 - t, values_[k - 1], t, values_[k]);
}

std::vector<double> node_aligned_grid(const FuzzyDataSet& data, std::size_t density) {
  if (density == 0) {
    throw Error(ErrorCode::InvalidArgument, "grid density must be at least 1");
  }
  const std::size_t n = data.interval_count();
  std::vector<double> grid;
  grid.reserve(n * density + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    const double a = data.x(i - 1);
    const double b = data.x(i);
    for (std::size_t j = 0; j < density; ++j) {
      grid.push_back(std::lerp(a, b, static_cast<double>(j) / static_cast<double>(density)));
    }
  }
  grid.push_back(data.x(n));
  return grid;
}

SampledFuzzyFunction node_interpolant(const FuzzyDataSet& data, std::size_t density) {
  auto grid = node_aligned_grid(data, density);
  std::vector<FuzzyNumber> values;
  values.reserve(grid.size());
  for (double x : grid) {
    const std::size_t i = data.locate(x);
    const double a = data.x(i - 1);
    const double b = data.x(i);
    const double t = std::clamp((x - a) / (b - a), 0.0, 1.0);
    if (t == 0.0) {
      values.push_back(data.u(i - 1));
    } else if (t == 1.0) {
      values.push_back(data.u(i));
    } else {
      values.push_back(combine(1.0 - t, data.u(i - 1), t, data.u(i)));
    }
  }
  return SampledFuzzyFunction(std::move(grid), std::move(values));
}

double metric_D(const SampledFuzzyFunction& phi, const SampledFuzzyFunction& psi) {
  const auto g1 = phi.grid();
  const auto g2 = psi.grid();
  double d = 0.0;
  if (std::equal(g1.begin(), g1.end(), g2.begin(), g2.end())) {
    for (std::size_t k = 0; k < g1.size(); ++k) {
      d = std::max(d, d_inf(phi.values()[k], psi.values()[k]));
    }
    return d;
  }
  const double lo = std::max(g1.front(), g2.front());
  const double hi = std::min(g1.back(), g2.back());
  if (!(lo <= hi)) {
    throw Error(ErrorCode::XOutOfRange, "functions have disjoint domains");
  }
  std::vector<double> points;
  points.reserve(g1.size() + g2.size());
  std::merge(g1.begin(), g1.end(), g2.begin(), g2.end(), std::back_inserter(points));
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (double x : points) {
    if (x < lo || x > hi) continue;
    d = std::max(d, d_inf(phi.evaluate(x), psi.evaluate(x)));
  }
  return d;
}

double distance_to_zero(const SampledFuzzyFunction& phi) noexcept {
  double d = 0.0;
  for (const auto& v : phi.values()) d = std::max(d, d_inf_zero(v));
  return d;
}

LevelTable export_level_sets(const SampledFuzzyFunction& phi,
                             std::span<const double> lambdas) {
  LevelTable table;
  table.lambdas.assign(lambdas.begin(), lambdas.end());
  table.x.assign(phi.grid().begin(), phi.grid().end());
  table.bands.resize(lambdas.size());
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    auto& band = table.bands[l];
    band.reserve(phi.size());
    for (const auto& v : phi.values()) band.push_back(v.level(lambdas[l]));
  }
  return table;
}

}  // namespace fuzzfrac
