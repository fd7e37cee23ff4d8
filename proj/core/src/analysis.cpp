#include "fuzzfrac/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "fuzzfrac/errors.hpp"

namespace fuzzfrac {
namespace {

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

double max_fuzzy_diff(std::span<const DataPoint> points, std::span<const FuzzyNumber> u_star) {
  double d = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) d = std::max(d, d_inf(points[k].u, u_star[k]));
  return d;
}

double domain_radius(const FuzzyDataSet& data) {
  const auto dom = data.domain();
  return std::max(std::abs(dom.lo), std::abs(dom.hi));
}

void check_x_star(const Rifs& rifs, std::span<const double> x_star) {
  const auto& data = rifs.data();
  if (x_star.size() != data.node_count()) {
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(data.node_count()) +
                                             " abscissae, got " +
                                             std::to_string(x_star.size()));
  }
  const std::size_t n = data.interval_count();
  if (x_star[0] != data.x(0) || x_star[n] != data.x(n)) {
    throw Error(ErrorCode::EndpointMoved, "perturbed abscissae must keep x_0 and x_n");
  }
  for (std::size_t k = 1; k <= n; ++k) {
    if (!(x_star[k] > x_star[k - 1])) {
      throw Error(ErrorCode::NotIncreasing,
                  "perturbed abscissae not increasing at node " + std::to_string(k));
    }
  }
}

void check_u_star(const Rifs& rifs, std::span<const FuzzyNumber> u_star) {
  const auto& data = rifs.data();
  if (u_star.size() != data.node_count()) {
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(data.node_count()) +
                                             " ordinates, got " + std::to_string(u_star.size()));
  }
  std::vector<DataPoint> points;
  points.reserve(u_star.size());
  for (std::size_t k = 0; k < u_star.size(); ++k) points.push_back({data.x(k), u_star[k]});
  const auto report = validate_scaling(FuzzyDataSet(std::move(points)), rifs.address(),
                                       rifs.alphas());
  if (!report.ok()) {
    const auto f = report.failures().front();
    throw Error(ErrorCode::ScalingConditionsViolated,
                "perturbed ordinates break " + std::string(to_string(f.condition)) +
                    " on interval " + std::to_string(f.interval));
  }
}

double x_term(const HolderParams& hp, double max_dx) {
  return max_dx == 0.0 ? 0.0 : hp.H * std::pow(max_dx, hp.tau);
}

FuzzyNumber crisp_shift(const FuzzyNumber& u, double c) {
  std::vector<double> lo(u.lower().begin(), u.lower().end());
  std::vector<double> hi(u.upper().begin(), u.upper().end());
  for (auto& v : lo) v += c;
  for (auto& v : hi) v += c;
  return FuzzyNumber(u.grid(), std::move(lo), std::move(hi));
}

std::vector<double> direction(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> r(count);
  double peak = 0.0;
  for (auto& v : r) {
    v = 2.0 * unit_uniform(rng) - 1.0;
    peak = std::max(peak, std::abs(v));
  }
  if (peak > 0.0) {
    for (auto& v : r) v /= peak;
  }
  return r;
}

}  // namespace

std::string_view to_string(HolderCase c) noexcept {
  switch (c) {
    case HolderCase::DeltaBelowOne: return "delta_lt_1";
    case HolderCase::DeltaEqualsOne: return "delta_eq_1";
    case HolderCase::DeltaAboveOne: return "delta_gt_1";
  }
  return "unknown";
}

HolderParams holder_params(double alpha, double c_min, double c_max, double I_min,
                           double I_max, double L_q, double X, double free_tau) {
  if (!(c_min > 0.0 && c_max < 1.0 && c_min <= c_max)) {
    throw Error(ErrorCode::InvalidArgument, "need 0 < c_min <= c_max < 1");
  }
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::InvalidScalingFactor, "alpha must lie in [0, 1)");
  }
  if (!(free_tau > 0.0 && free_tau < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "free tau must lie in (0, 1)");
  }

  HolderParams hp;
  hp.alpha = alpha;
  hp.c_min = c_min;
  hp.c_max = c_max;
  hp.I_min = I_min;
  hp.I_max = I_max;
  hp.L_q = L_q;
  hp.delta = alpha / c_min;
  hp.M_bound = 2.0 * L_q * X / (1.0 - alpha);
  hp.N_bound = std::max(hp.M_bound / (c_min * I_min), L_q);

  const double N = hp.N_bound;
  const double spread = std::max(1.0, I_max);
  if (std::abs(hp.delta - 1.0) <= kDeltaOneTolerance) {
    hp.holder_case = HolderCase::DeltaEqualsOne;
    hp.tau = free_tau;
    hp.Q = N * (1.0 - 1.0 / ((1.0 - free_tau) * std::numbers::e * std::log(c_max))) * spread;
  } else if (hp.delta < 1.0) {
    hp.holder_case = HolderCase::DeltaBelowOne;
    hp.tau = 1.0;
    hp.Q = N / (1.0 - hp.delta);
  } else {
    hp.holder_case = HolderCase::DeltaAboveOne;
    hp.tau = std::log(hp.delta) / std::log(c_max) + 1.0;
    if (!(hp.tau > 0.0)) {
      throw Error(ErrorCode::DegenerateHolderExponent,
                  "delta = " + std::to_string(hp.delta) + " gives exponent " +
                      std::to_string(hp.tau) + " <= 0");
    }
    hp.Q = N * hp.delta / (hp.delta - 1.0) * spread;
  }
  hp.H = 2.0 * hp.Q;
  return hp;
}

HolderParams holder_params(const Rifs& rifs, double free_tau) {
  const auto c = rifs.contraction_factors();
  double I_min = std::numeric_limits<double>::infinity();
  double I_max = 0.0;
  for (std::size_t i = 1; i <= rifs.interval_count(); ++i) {
    const double len = rifs.address_interval(i).length();
    I_min = std::min(I_min, len);
    I_max = std::max(I_max, len);
  }
  return holder_params(rifs.max_alpha(), *std::min_element(c.begin(), c.end()),
                       *std::max_element(c.begin(), c.end()), I_min, I_max,
                       rifs.max_lipschitz(), domain_radius(rifs.data()), free_tau);
}

HolderCheck verify_holder(const SampledFuzzyFunction& f, const HolderParams& hp,
                          std::size_t num_pairs, std::uint64_t seed, double slack) {
  HolderCheck check;
  check.pairs = num_pairs;
  check.bound_coefficient = hp.H;
  const auto dom = f.domain();
  std::mt19937_64 rng(seed);
  for (std::size_t p = 0; p < num_pairs; ++p) {
    const double x = std::lerp(dom.lo, dom.hi, unit_uniform(rng));
    const double y = std::lerp(dom.lo, dom.hi, unit_uniform(rng));
    const double d = d_inf(f.evaluate(x), f.evaluate(y));
    const double gap = std::pow(std::abs(x - y), hp.tau);
    if (d > hp.H * gap + slack) ++check.violations;
    if (gap > 0.0) check.worst_ratio = std::max(check.worst_ratio, d / gap);
  }
  return check;
}

double a_priori_bound(const Rifs& rifs) {
  return rifs.max_lipschitz() * domain_radius(rifs.data()) / (1.0 - rifs.max_alpha());
}

double bound_perturb_x(const Rifs& rifs, const HolderParams& hp,
                       std::span<const double> x_star) {
  check_x_star(rifs, x_star);
  const double max_dx = max_abs_diff(rifs.data().abscissae(), x_star);
  const double a = rifs.max_alpha();
  return (1.0 + a) * x_term(hp, max_dx) / (1.0 - a);
}

double bound_perturb_u(const Rifs& rifs, std::span<const FuzzyNumber> u_star,
                       std::optional<double> mu) {
  check_u_star(rifs, u_star);
  const double a = rifs.max_alpha();
  return mu.value_or(1.0 + a) * max_fuzzy_diff(rifs.data().points(), u_star) / (1.0 - a);
}

double bound_perturb_both(const Rifs& rifs, const HolderParams& hp,
                          std::span<const double> x_star,
                          std::span<const FuzzyNumber> u_star) {
  check_x_star(rifs, x_star);
  check_u_star(rifs, u_star);
  const double max_dx = max_abs_diff(rifs.data().abscissae(), x_star);
  const double max_du = max_fuzzy_diff(rifs.data().points(), u_star);
  const double a = rifs.max_alpha();
  return (1.0 + a) / (1.0 - a) * (x_term(hp, max_dx) + max_du);
}

double bound_perturb_alpha(const Rifs& rifs, std::span<const double> alpha_star,
                           std::optional<double> mu) {
  if (alpha_star.size() != rifs.interval_count()) {
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(rifs.interval_count()) +
                                             " scaling factors, got " +
                                             std::to_string(alpha_star.size()));
  }
  for (double a : alpha_star) {
    if (!(a >= 0.0 && a < 1.0)) {
      throw Error(ErrorCode::InvalidScalingFactor, "scaling factors must lie in [0, 1)");
    }
  }
  const auto report = validate_scaling(rifs.data(), rifs.address(), alpha_star);
  if (!report.ok()) {
    const auto f = report.failures().front();
    throw Error(ErrorCode::ScalingConditionsViolated,
                "perturbed scaling factors break " + std::string(to_string(f.condition)) +
                    " on interval " + std::to_string(f.interval));
  }
  double m = 0.0;
  if (mu) {
    m = *mu;
  } else {
    for (const auto& p : rifs.data().points()) m = std::max(m, d_inf_zero(p.u));
  }
  const double a = rifs.max_alpha();
  const double a_star = *std::max_element(alpha_star.begin(), alpha_star.end());
  const double L = rifs.max_lipschitz();
  const double X = domain_radius(rifs.data());
  return (L * X / ((1.0 - a) * (1.0 - a_star)) + m / (1.0 - a_star)) *
         max_abs_diff(rifs.alphas(), alpha_star);
}

std::string_view to_string(PerturbationKind kind) noexcept {
  switch (kind) {
    case PerturbationKind::X: return "perturb_x";
    case PerturbationKind::U: return "perturb_u";
    case PerturbationKind::Both: return "perturb_both";
    case PerturbationKind::Alpha: return "perturb_alpha";
  }
  return "unknown";
}

std::optional<PerturbationKind> parse_perturbation_kind(std::string_view name) noexcept {
  for (auto k : {PerturbationKind::X, PerturbationKind::U, PerturbationKind::Both,
                 PerturbationKind::Alpha}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

PerturbedInputs make_perturbation(const Rifs& rifs, const PerturbationRequest& request) {
  const auto& data = rifs.data();
  const std::size_t nodes = data.node_count();
  PerturbedInputs out;
  out.x = data.abscissae();
  for (const auto& p : data.points()) out.u.push_back(p.u);
  out.alphas.assign(rifs.alphas().begin(), rifs.alphas().end());

  const bool move_x =
      request.kind == PerturbationKind::X || request.kind == PerturbationKind::Both;
  const bool move_u =
      request.kind == PerturbationKind::U || request.kind == PerturbationKind::Both;

  if (request.index) {
    const std::size_t k = *request.index;
    if (request.kind == PerturbationKind::Alpha) {
      if (k < 1 || k > rifs.interval_count()) {
        throw Error(ErrorCode::InvalidArgument,
                    "alpha index must be in 1.." + std::to_string(rifs.interval_count()));
      }
      out.alphas[k - 1] += request.size;
      return out;
    }
    if (k >= nodes) {
      throw Error(ErrorCode::InvalidArgument,
                  "node index must be in 0.." + std::to_string(nodes - 1));
    }
    if (move_x) out.x[k] += request.size;
    if (move_u) out.u[k] = crisp_shift(out.u[k], request.size);
    return out;
  }

  if (request.kind == PerturbationKind::Alpha) {
    const auto r = direction(out.alphas.size(), request.seed);
    for (std::size_t i = 0; i < r.size(); ++i) {
      out.alphas[i] = std::max(0.0, out.alphas[i] - request.size * std::abs(r[i]));
    }
    return out;
  }
  if (move_x) {
    const auto r = direction(nodes - 2, request.seed);
    for (std::size_t k = 1; k + 1 < nodes; ++k) out.x[k] += request.size * r[k - 1];
  }
  if (move_u) {
    const auto r = direction(nodes, request.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t k = 0; k < nodes; ++k) out.u[k] = crisp_shift(out.u[k], request.size * r[k]);
  }
  return out;
}

Rifs perturbed_rifs(const Rifs& rifs, const PerturbedInputs& inputs) {
  try {
    std::vector<DataPoint> points;
    points.reserve(inputs.x.size());
    for (std::size_t k = 0; k < inputs.x.size(); ++k) points.push_back({inputs.x[k], inputs.u[k]});
    return Rifs::build(FuzzyDataSet(std::move(points)), rifs.address(), inputs.alphas,
                       rifs.options());
  } catch (const Error& e) {
    throw Error(ErrorCode::InadmissiblePerturbation, e.what());
  }
}

StabilityReport run_perturbation_experiment(const Rifs& rifs,
                                            const PerturbationRequest& request,
                                            const SolveOptions& solve_options) {
  const auto original = solve(rifs, solve_options);
  return run_perturbation_experiment(rifs, original.function, request, solve_options);
}

StabilityReport run_perturbation_experiment(const Rifs& rifs,
                                            const SampledFuzzyFunction& original,
                                            const PerturbationRequest& request,
                                            const SolveOptions& solve_options) {
  const auto inputs = make_perturbation(rifs, request);

  StabilityReport report;
  report.kind = request.kind;
  report.perturbation_size = request.size;
  try {
    switch (request.kind) {
      case PerturbationKind::X:
        report.theoretical_bound = bound_perturb_x(rifs, holder_params(rifs), inputs.x);
        break;
      case PerturbationKind::U:
        report.theoretical_bound = bound_perturb_u(rifs, inputs.u);
        break;
      case PerturbationKind::Both:
        report.theoretical_bound =
            bound_perturb_both(rifs, holder_params(rifs), inputs.x, inputs.u);
        break;
      case PerturbationKind::Alpha:
        report.theoretical_bound = bound_perturb_alpha(rifs, inputs.alphas);
        break;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateHolderExponent) throw;
    throw Error(ErrorCode::InadmissiblePerturbation, e.what());
  }
  const Rifs perturbed = perturbed_rifs(rifs, inputs);

  const auto moved = solve(perturbed, solve_options);
  report.observed_D = metric_D(original, moved.function);
  report.slack = 10.0 * solve_options.tol;
  report.margin = report.theoretical_bound + report.slack - report.observed_D;
  return report;
}

}  // namespace fuzzfrac
