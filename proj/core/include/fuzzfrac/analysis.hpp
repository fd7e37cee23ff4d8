#ifndef FUZZFRAC_ANALYSIS_HPP
#define FUZZFRAC_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fuzzfrac/fuzzy_number.hpp"
#include "fuzzfrac/rifs.hpp"
#include "fuzzfrac/sampled_function.hpp"
#include "fuzzfrac/solver.hpp"

namespace fuzzfrac {

enum class HolderCase { DeltaBelowOne, DeltaEqualsOne, DeltaAboveOne };

std::string_view to_string(HolderCase c) noexcept;

// Hölder data for d_∞(f̃(x), f̃(y)) ≤ H·|x − y|^τ with H = 2Q.
struct HolderParams {
  double alpha = 0.0;
  double c_min = 0.0;
  double c_max = 0.0;
  double I_min = 0.0;  // shortest address interval
  double I_max = 0.0;  // longest address interval
  double L_q = 0.0;
  double delta = 0.0;  // α / c_min
  HolderCase holder_case = HolderCase::DeltaBelowOne;
  double tau = 1.0;
  double Q = 0.0;
  double M_bound = 0.0;
  double N_bound = 0.0;
  double H = 0.0;
};

// Relative tolerance used to classify δ as exactly 1.
inline constexpr double kDeltaOneTolerance = 1e-12;

// Case dispatch on raw ingredients. X = max(|x_0|, |x_n|). free_tau is the
// exponent used when δ = 1 and must lie in (0, 1). Throws
// Error{DegenerateHolderExponent} when δ > 1/c_max, where the exponent
// formula leaves (0, 1].
HolderParams holder_params(double alpha, double c_min, double c_max, double I_min,
                           double I_max, double L_q, double X, double free_tau = 0.5);
HolderParams holder_params(const Rifs& rifs, double free_tau = 0.5);

struct HolderCheck {
  std::size_t pairs = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;  // max d_∞(f(x), f(y)) / |x − y|^τ
  double bound_coefficient = 0.0;
  bool passed() const noexcept { return violations == 0; }
};

// Samples random pairs from the domain of f and counts pairs exceeding
// H·|x − y|^τ + slack.
HolderCheck verify_holder(const SampledFuzzyFunction& f, const HolderParams& hp,
                          std::size_t num_pairs, std::uint64_t seed, double slack);

// L_q·max(|x_0|, |x_n|)/(1 − α). Derived from d_∞(q̃ᵢ(x), 𝟎) ≤ L_q̃ᵢ|x|, which
// needs q̃ᵢ to vanish at the origin; callers should not treat it as a
// guarantee for arbitrary data.
double a_priori_bound(const Rifs& rifs);

// Bound on D(f̃, f̃^{x*}) for moved interior abscissae. Throws
// Error{EndpointMoved}, Error{NotIncreasing}, Error{SizeMismatch}.
double bound_perturb_x(const Rifs& rifs, const HolderParams& hp,
                       std::span<const double> x_star);

// μ·max d_∞(uᵢ, uᵢ*)/(1 − α); μ defaults to 1 + α. Throws
// Error{ScalingConditionsViolated} if u* is not admissible with the same α.
double bound_perturb_u(const Rifs& rifs, std::span<const FuzzyNumber> u_star,
                       std::optional<double> mu = std::nullopt);

// (1 + α)/(1 − α)·(H·max|xᵢ − xᵢ*|^τ + max d_∞(uᵢ, uᵢ*)).
double bound_perturb_both(const Rifs& rifs, const HolderParams& hp,
                          std::span<const double> x_star,
                          std::span<const FuzzyNumber> u_star);

// [L_q·X/((1 − α)(1 − α*)) + μ/(1 − α*)]·max|αᵢ − αᵢ*| with α* = max αᵢ*;
// μ defaults to max d_∞(uᵢ, 𝟎). Throws Error{ScalingConditionsViolated}.
double bound_perturb_alpha(const Rifs& rifs, std::span<const double> alpha_star,
                           std::optional<double> mu = std::nullopt);

enum class PerturbationKind { X, U, Both, Alpha };

std::string_view to_string(PerturbationKind kind) noexcept;
// Accepts "perturb_x", "perturb_u", "perturb_both", "perturb_alpha".
std::optional<PerturbationKind> parse_perturbation_kind(std::string_view name) noexcept;

// Without index, a seeded direction r with max|rᵢ| = 1 is scaled by size:
// interior abscissae move by size·rᵢ, ordinates get crisp shifts size·rᵢ,
// and scaling factors drop by size·|rᵢ| (clamped at 0). With index, only
// that component moves, by +size (node index for x and u, 1-based interval
// for α).
struct PerturbationRequest {
  PerturbationKind kind = PerturbationKind::U;
  double size = 0.0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> index;
};

struct PerturbedInputs {
  std::vector<double> x;
  std::vector<FuzzyNumber> u;
  std::vector<double> alphas;
};

PerturbedInputs make_perturbation(const Rifs& rifs, const PerturbationRequest& request);

// Builds the perturbed system. Construction failures are reported as
// Error{InadmissiblePerturbation} carrying the original message.
Rifs perturbed_rifs(const Rifs& rifs, const PerturbedInputs& inputs);

struct StabilityReport {
  PerturbationKind kind = PerturbationKind::U;
  double perturbation_size = 0.0;
  double theoretical_bound = 0.0;
  double observed_D = 0.0;
  double slack = 0.0;   // 10·solver tol
  double margin = 0.0;  // theoretical_bound + slack − observed_D
  bool passed() const noexcept { return margin >= 0.0; }
};

StabilityReport run_perturbation_experiment(const Rifs& rifs,
                                            const PerturbationRequest& request,
                                            const SolveOptions& solve_options = {});

// Same, reusing an already solved original.
StabilityReport run_perturbation_experiment(const Rifs& rifs,
                                            const SampledFuzzyFunction& original,
                                            const PerturbationRequest& request,
                                            const SolveOptions& solve_options);

}  // namespace fuzzfrac

#endif  // FUZZFRAC_ANALYSIS_HPP
