#include "fuzzfrac/solver.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "fuzzfrac/errors.hpp"
#include "parallel.hpp"

namespace fuzzfrac {

TransformOperator::TransformOperator(const Rifs& rifs, std::vector<double> grid,
                                     std::size_t threads)
    : grid_(std::move(grid)), threads_(resolve_thread_count(threads)) {
  const auto dom = rifs.data().domain();
  if (grid_.size() < 2 || grid_.front() != dom.lo || grid_.back() != dom.hi) {
    throw Error(ErrorCode::InvalidArgument,
                "operator grid must span the data domain exactly");
  }
  for (std::size_t k = 1; k < grid_.size(); ++k) {
    if (!(grid_[k] > grid_[k - 1])) {
      throw Error(ErrorCode::NotIncreasing, "operator grid must be strictly increasing");
    }
  }

  std::vector<std::optional<PointPlan>> plan(grid_.size());
  detail::parallel_for(grid_.size(), threads_, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double x = grid_[k];
      const std::size_t i = rifs.data().locate(x);
      const double p = rifs.map_l_inv(i, x);
      const auto it = std::lower_bound(grid_.begin(), grid_.end(), p);
      std::size_t cell = static_cast<std::size_t>(it - grid_.begin());
      double weight = 0.0;
      if (*it != p) {
        cell -= 1;
        weight = (p - grid_[cell]) / (grid_[cell + 1] - grid_[cell]);
      }
      plan[k].emplace(PointPlan{i, rifs.alpha(i), p, cell, weight, rifs.q_map(i, x)});
    }
  });
  plan_.reserve(plan.size());
  for (auto& p : plan) plan_.push_back(std::move(*p));
}

SampledFuzzyFunction TransformOperator::apply(const SampledFuzzyFunction& phi) const {
  const auto pg = phi.grid();
  const bool same_grid = std::equal(pg.begin(), pg.end(), grid_.begin(), grid_.end());
  const auto values = phi.values();

  std::vector<std::optional<FuzzyNumber>> out(grid_.size());
  detail::parallel_for(grid_.size(), threads_, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto& p = plan_[k];
      if (!same_grid) {
        out[k].emplace(add(scale(p.alpha, phi.evaluate(p.preimage)), p.q));
      } else if (p.weight == 0.0) {
        out[k].emplace(add(scale(p.alpha, values[p.cell]), p.q));
      } else {
        out[k].emplace(add(combine(p.alpha * (1.0 - p.weight), values[p.cell],
                                   p.alpha * p.weight, values[p.cell + 1]),
                           p.q));
      }
    }
  });

  std::vector<FuzzyNumber> result;
  result.reserve(out.size());
  for (auto& v : out) result.push_back(std::move(*v));
  return SampledFuzzyFunction(grid_, std::move(result));
}

SampledFuzzyFunction apply_T(const Rifs& rifs, const SampledFuzzyFunction& phi) {
  const TransformOperator op(rifs, {phi.grid().begin(), phi.grid().end()});
  return op.apply(phi);
}

Solution solve(const Rifs& rifs, const SolveOptions& options) {
  if (!(options.tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
  const TransformOperator op(rifs, node_aligned_grid(rifs.data(), options.grid_density),
                             options.threads);
  const double alpha = rifs.max_alpha();
  const double bound_factor = alpha / (1.0 - alpha);

  IterationReport report;
  report.alpha = alpha;
  auto current = node_interpolant(rifs.data(), options.grid_density);
  for (std::size_t k = 1; k <= options.max_iter; ++k) {
    auto next = op.apply(current);
    const double step = metric_D(next, current);
    report.successive_D.push_back(step);
    report.iterations = k;
    current = std::move(next);
    if (bound_factor * step <= options.tol) {
      report.a_posteriori_error = bound_factor * step;
      report.final_residual = metric_D(current, op.apply(current));
      return Solution{std::move(current), std::move(report)};
    }
  }
  throw Error(ErrorCode::MaxIterExceeded,
              "no convergence to tol after " + std::to_string(options.max_iter) +
                  " iterations (last step " + std::to_string(report.successive_D.back()) +
                  ")");
}

double residual(const Rifs& rifs, const SampledFuzzyFunction& phi,
                std::span<const double> probes) {
  if (probes.empty()) return metric_D(phi, apply_T(rifs, phi));
  double worst = 0.0;
  for (double x : probes) {
    const std::size_t i = rifs.data().locate(x);
    const auto image =
        add(scale(rifs.alpha(i), phi.evaluate(rifs.map_l_inv(i, x))), rifs.q_map(i, x));
    worst = std::max(worst, d_inf(phi.evaluate(x), image));
  }
  return worst;
}

}  // namespace fuzzfrac
