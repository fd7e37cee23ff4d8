#ifndef FUZZFRAC_SOLVER_HPP
#define FUZZFRAC_SOLVER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fuzzfrac/fuzzy_number.hpp"
#include "fuzzfrac/rifs.hpp"
#include "fuzzfrac/sampled_function.hpp"

namespace fuzzfrac {

// Worker count for grid-parallel loops. 0 means hardware concurrency; the
// FUZZFRAC_THREADS environment variable, when set to a positive value, caps
// the result.
std::size_t resolve_thread_count(std::size_t requested) noexcept;

// The operator (T̃φ)(x) = αᵢ·φ(l̃ᵢ⁻¹(x)) ⊕ q̃ᵢ(x), x ∈ Iᵢ, discretized on a
// fixed output grid. Preimages and q̃ᵢ values are computed once, so repeated
// application only does the fuzzy scale-and-add.
class TransformOperator {
 public:
  TransformOperator(const Rifs& rifs, std::vector<double> grid, std::size_t threads = 0);

  std::span<const double> grid() const noexcept { return grid_; }

  // Output lives on grid(). φ may use any grid covering the domain.
  SampledFuzzyFunction apply(const SampledFuzzyFunction& phi) const;

 private:
  struct PointPlan {
    std::size_t interval;
    double alpha;
    double preimage;
    // Location of the preimage in grid_: cell and weight toward cell + 1.
    std::size_t cell;
    double weight;
    FuzzyNumber q;
  };

  std::vector<double> grid_;
  std::vector<PointPlan> plan_;
  std::size_t threads_;
};

// T̃ applied to φ, sampled on φ's own grid.
SampledFuzzyFunction apply_T(const Rifs& rifs, const SampledFuzzyFunction& phi);

struct SolveOptions {
  std::size_t grid_density = 64;
  double tol = 1e-8;
  std::size_t max_iter = 10000;
  std::size_t threads = 0;
};

struct IterationReport {
  std::size_t iterations = 0;
  std::vector<double> successive_D;
  double final_residual = 0.0;
  double alpha = 0.0;
  double a_posteriori_error = 0.0;
};

struct Solution {
  SampledFuzzyFunction function;
  IterationReport report;
};

// Banach iteration from the node interpolant until the a-posteriori bound
// α/(1−α)·D(φ_{k+1}, φ_k) drops to tol. Throws Error{MaxIterExceeded}.
Solution solve(const Rifs& rifs, const SolveOptions& options = {});

// max over the probe points of d_∞(φ(x), αᵢφ(l̃ᵢ⁻¹(x)) ⊕ q̃ᵢ(x)). With no
// probes, φ's own grid is used, which equals D(φ, T̃φ).
double residual(const Rifs& rifs, const SampledFuzzyFunction& phi,
                std::span<const double> probes = {});

struct ChaosPoint {
  double x;
  FuzzyNumber u;
  std::size_t interval;
};

// Random iteration of the RIFS: from state (1, (x_0, u_0)), draw the next map
// t from row s of M, apply w̃_t, set s ← t. Emits the steps after burn_in.
// Deterministic for a given seed.
std::vector<ChaosPoint> chaos_game(const Rifs& rifs, std::size_t steps, std::size_t burn_in,
                                   std::uint64_t seed);

}  // namespace fuzzfrac

#endif  // FUZZFRAC_SOLVER_HPP
