#ifndef FUZZFRAC_RIFS_HPP
#define FUZZFRAC_RIFS_HPP

// Recurrent iterated function system built from fuzzy interpolation data.
//
// Indexing convention used throughout this header: data nodes are numbered
// 0..n, subintervals I_i = [x_{i-1}, x_i] are numbered 1..n, and every
// per-interval quantity (maps, scaling factors, matrix rows and columns) is
// addressed by that 1-based interval index.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzfrac/fuzzy_number.hpp"

namespace fuzzfrac {

struct DataPoint {
  double x;
  FuzzyNumber u;
};

// Interpolation data {(x_i, u_i)}, i = 0..n, with x strictly increasing and
// n ≥ 2.
class FuzzyDataSet {
 public:
  explicit FuzzyDataSet(std::vector<DataPoint> points);

  std::size_t node_count() const noexcept { return points_.size(); }
  std::size_t interval_count() const noexcept { return points_.size() - 1; }

  double x(std::size_t node) const { return points_.at(node).x; }
  const FuzzyNumber& u(std::size_t node) const { return points_.at(node).u; }
  std::span<const DataPoint> points() const noexcept { return points_; }
  std::vector<double> abscissae() const;

  Interval domain() const noexcept { return {points_.front().x, points_.back().x}; }
  Interval subinterval(std::size_t i) const;

  // Interval index containing x. A shared node x_i belongs to I_i; x_0
  // belongs to I_1. Throws Error{XOutOfRange} outside [x_0, x_n].
  std::size_t locate(double x) const;

 private:
  std::vector<DataPoint> points_;
};

// Address interval Ĩ_σ(i) = [x_start, x_end] for one subinterval.
struct AddressInterval {
  std::size_t start;
  std::size_t end;
  friend bool operator==(const AddressInterval&, const AddressInterval&) = default;
};

// One address interval per subinterval, each spanning at least two
// subintervals (end − start ≥ 2).
class AddressMap {
 public:
  explicit AddressMap(std::vector<AddressInterval> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const AddressInterval& operator[](std::size_t i) const { return entries_.at(i - 1); }
  std::span<const AddressInterval> entries() const noexcept { return entries_; }

  // Throws Error{SizeMismatch} / Error{InvalidAddress} when this map does
  // not fit the data set.
  void check_against(const FuzzyDataSet& data) const;

 private:
  std::vector<AddressInterval> entries_;
};

// c_l̃ᵢ = (x_i − x_{i−1}) / (x_{e_i} − x_{s_i}) for every interval.
std::vector<double> map_contraction_factors(const FuzzyDataSet& data,
                                            const AddressMap& address);

// ---------------------------------------------------------------------------
// Scaling-factor admissibility

enum class ScalingCondition {
  LengthDomination,    // cuts of u_{i-1}, uᵢ at least αᵢ times as long as those of u_s, u_e
  LowerNondecreasing,  // lower endpoint of the q̃ᵢ difference nondecreasing in λ
  UpperNonincreasing,  // upper endpoint of the q̃ᵢ difference nonincreasing in λ
};

std::string_view to_string(ScalingCondition condition) noexcept;

struct ScalingCheck {
  std::size_t interval;
  ScalingCondition condition;
  bool passed;
  std::optional<double> offending_lambda;
};

struct ScalingReport {
  std::vector<ScalingCheck> checks;

  bool ok() const noexcept;
  std::vector<ScalingCheck> failures() const;
};

// Checks all three conditions for every interval at every λ of the data's grids.
// Monotonicity is non-strict. Never throws for condition failures.
ScalingReport validate_scaling(const FuzzyDataSet& data, const AddressMap& address,
                               std::span<const double> alphas);

// Lipschitz constant of q̃ᵢ from the four-term bound over λ ∈ {0, 1}.
double lipschitz_q(const FuzzyDataSet& data, const AddressMap& address,
                   std::span<const double> alphas, std::size_t i);

// ---------------------------------------------------------------------------
// Transition structure

// Dense n×n row-stochastic matrix addressed by 1-based interval indices.
class StochasticMatrix {
 public:
  StochasticMatrix() = default;
  StochasticMatrix(std::size_t n, std::vector<double> row_major);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t s, std::size_t t) const {
    return entries_.at((s - 1) * n_ + (t - 1));
  }
  std::span<const double> row(std::size_t s) const {
    return std::span<const double>(entries_).subspan((s - 1) * n_, n_);
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

struct TransitionStructure {
  StochasticMatrix matrix;
  // connections[i-1] = Λ(i) = { j : I_j ⊆ Ĩ_σ(i) }, ascending.
  std::vector<std::vector<std::size_t>> connections;
  // coverage[s-1] = a_s, the number of address intervals containing I_s.
  std::vector<std::size_t> coverage;
};

// p_st = 1/a_s if I_s ⊆ Ĩ_σ(t), else 0. Throws Error{DanglingInterval} when
// some I_s lies in no address interval.
TransitionStructure build_matrix(const FuzzyDataSet& data, const AddressMap& address);

// True iff the directed graph s → t (p_st > 0) is strongly connected.
bool check_irreducible(const StochasticMatrix& m);

// Interval indices that are not mutually reachable with interval 1.
std::vector<std::size_t> unreachable_intervals(const StochasticMatrix& m);

// ---------------------------------------------------------------------------
// Contraction certificate for the maps w̃ᵢ in the metric
// d_θ((x,u),(y,v)) = |x−y| + θ·d_∞(u,v).

struct ContractionCertificate {
  double theta_max;  // +inf when every L_q̃ᵢ·c_l̃ᵢ vanishes
  double theta;
  std::vector<double> map_factors;  // c_w̃ᵢ
  double max_factor;
};

// θ defaults to θ_max/2 (or 1 when θ_max is infinite). Throws
// Error{NotContractive} if some c_w̃ᵢ ≥ 1 and Error{InvalidArgument} for
// θ ≤ 0.
ContractionCertificate contraction_certificate(std::span<const double> map_factors,
                                               std::span<const double> lipschitz,
                                               std::span<const double> alphas,
                                               std::optional<double> theta = std::nullopt);

// ---------------------------------------------------------------------------

struct RifsOptions {
  std::optional<double> theta;
};

// A validated RIFS {I × R_F; M; w̃ᵢ} with q̃ᵢ from the Hukuhara-difference
// construction. Immutable; safe to share between threads.
class Rifs {
 public:
  // Runs every construction check and throws the first failure:
  // SizeMismatch, InvalidAddress, InvalidScalingFactor, NotContractive (for
  // c_l̃ᵢ ≥ 1), ScalingConditionsViolated, DanglingInterval, NotIrreducible.
  static Rifs build(FuzzyDataSet data, AddressMap address, std::vector<double> alphas,
                    RifsOptions options = {});

  const FuzzyDataSet& data() const noexcept { return data_; }
  const AddressMap& address() const noexcept { return address_; }
  std::span<const double> alphas() const noexcept { return alphas_; }
  double alpha(std::size_t i) const { return alphas_.at(i - 1); }
  double max_alpha() const noexcept { return max_alpha_; }
  std::size_t interval_count() const noexcept { return alphas_.size(); }

  std::span<const double> contraction_factors() const noexcept { return map_factors_; }
  double contraction_factor(std::size_t i) const { return map_factors_.at(i - 1); }
  std::span<const double> lipschitz_constants() const noexcept { return lipschitz_; }
  double lipschitz(std::size_t i) const { return lipschitz_.at(i - 1); }
  double max_lipschitz() const noexcept;

  const TransitionStructure& transitions() const noexcept { return transitions_; }
  const ContractionCertificate& certificate() const noexcept { return certificate_; }
  const RifsOptions& options() const noexcept { return options_; }

  // Address interval Ĩ_σ(i) as a real interval.
  Interval address_interval(std::size_t i) const;

  // l̃ᵢ: Ĩ_σ(i) → Iᵢ and its inverse. Throw Error{XOutOfDomain}.
  double map_l(std::size_t i, double x) const;
  double map_l_inv(std::size_t i, double x) const;

  // q̃ᵢ(x) for x ∈ Iᵢ.
  FuzzyNumber q_map(std::size_t i, double x) const;
  // F̃ᵢ(x, u) = αᵢu ⊕ q̃ᵢ(l̃ᵢ(x)) for x ∈ Ĩ_σ(i).
  FuzzyNumber f_map(std::size_t i, double x, const FuzzyNumber& u) const;
  // w̃ᵢ(x, u) = (l̃ᵢ(x), F̃ᵢ(x, u)).
  std::pair<double, FuzzyNumber> w_map(std::size_t i, double x, const FuzzyNumber& u) const;

 private:
  Rifs(FuzzyDataSet data, AddressMap address, std::vector<double> alphas,
       RifsOptions options);

  void check_interval(std::size_t i) const;

  FuzzyDataSet data_;
  AddressMap address_;
  std::vector<double> alphas_;
  RifsOptions options_;
  double max_alpha_ = 0.0;
  std::vector<double> map_factors_;
  std::vector<double> lipschitz_;
  TransitionStructure transitions_;
  ContractionCertificate certificate_;
};

}  // namespace fuzzfrac

#endif  // FUZZFRAC_RIFS_HPP
