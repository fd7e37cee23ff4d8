#include "fuzzfrac/rifs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "fuzzfrac/errors.hpp"

namespace fuzzfrac {
namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

double domain_slack(double a, double b) noexcept {
  return 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Clamp x into [a, b] if it is within rounding distance, else throw.
double clamp_into(double x, double a, double b, const char* what) {
  const double slack = domain_slack(a, b);
  if (!(x >= a - slack && x <= b + slack)) {
    throw Error(ErrorCode::XOutOfDomain, std::string(what) + ": x = " + num(x) +
                                             " not in [" + num(a) + ", " + num(b) + "]");
  }
  return std::clamp(x, a, b);
}

struct ScalingPair {
  const FuzzyNumber* target;  // u_{i-1} or u_i
  const FuzzyNumber* source;  // u_{s_i} or u_{e_i}
};

// Evaluates one scaling condition for both endpoint pairs of an interval and
// returns the first offending λ, if any.
template <typename Predicate>
std::optional<double> first_failure(const ScalingPair (&pairs)[2], double alpha,
                                    Predicate&& failed) {
  for (const auto& pair : pairs) {
    const auto grid = LambdaGrid::merge(pair.target->grid(), pair.source->grid());
    const auto a = pair.target->resampled(grid);
    const auto b = pair.source->resampled(grid);
    const auto al = a.lower();
    const auto ah = a.upper();
    const auto bl = b.lower();
    const auto bh = b.upper();
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double g_lo = al[k] - alpha * bl[k];
      const double g_hi = ah[k] - alpha * bh[k];
      if (k == 0) {
        if (failed(g_lo, g_hi, g_lo, g_hi)) return grid[k];
        continue;
      }
      const double p_lo = al[k - 1] - alpha * bl[k - 1];
      const double p_hi = ah[k - 1] - alpha * bh[k - 1];
      if (failed(g_lo, g_hi, p_lo, p_hi)) return grid[k];
    }
  }
  return std::nullopt;
}

void check_interval_index(std::size_t i, std::size_t n) {
  if (i < 1 || i > n) {
    throw Error(ErrorCode::InvalidArgument,
                "interval index " + std::to_string(i) + " not in 1.." + std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// FuzzyDataSet

FuzzyDataSet::FuzzyDataSet(std::vector<DataPoint> points) : points_(std::move(points)) {
  if (points_.size() < 3) {
    throw Error(ErrorCode::TooFewPoints,
                "need at least 3 data points (n >= 2), got " + std::to_string(points_.size()));
  }
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (!std::isfinite(points_[k].x)) {
      throw Error(ErrorCode::InvalidArgument, "x_" + std::to_string(k) + " is not finite");
    }
    if (k > 0 && !(points_[k].x > points_[k - 1].x)) {
      throw Error(ErrorCode::NotIncreasing,
                  "x_" + std::to_string(k) + " = " + num(points_[k].x) +
                      " does not exceed x_" + std::to_string(k - 1) + " = " +
                      num(points_[k - 1].x));
    }
  }
}

std::vector<double> FuzzyDataSet::abscissae() const {
  std::vector<double> xs;
  xs.reserve(points_.size());
  for (const auto& p : points_) xs.push_back(p.x);
  return xs;
}

Interval FuzzyDataSet::subinterval(std::size_t i) const {
  check_interval_index(i, interval_count());
  return {points_[i - 1].x, points_[i].x};
}

std::size_t FuzzyDataSet::locate(double x) const {
  const auto d = domain();
  if (!(x >= d.lo && x <= d.hi)) {
    throw Error(ErrorCode::XOutOfRange,
                "x = " + num(x) + " not in [" + num(d.lo) + ", " + num(d.hi) + "]");
  }
  const auto it = std::lower_bound(points_.begin() + 1, points_.end(), x,
                                   [](const DataPoint& p, double v) { return p.x < v; });
  return static_cast<std::size_t>(it - points_.begin());
}

// ---------------------------------------------------------------------------
// AddressMap

AddressMap::AddressMap(std::vector<AddressInterval> entries) : entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const auto& a = entries_[k];
    if (!(a.start < a.end) || a.end - a.start < 2) {
      throw Error(ErrorCode::InvalidAddress,
                  "address interval " + std::to_string(k + 1) + " = [x_" +
                      std::to_string(a.start) + ", x_" + std::to_string(a.end) +
                      "] violates e_i - s_i >= 2");
    }
  }
}

void AddressMap::check_against(const FuzzyDataSet& data) const {
  if (entries_.size() != data.interval_count()) {
    throw Error(ErrorCode::SizeMismatch,
                "expected " + std::to_string(data.interval_count()) +
                    " address intervals, got " + std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k].end > data.interval_count()) {
      throw Error(ErrorCode::InvalidAddress,
                  "address interval " + std::to_string(k + 1) + " ends at node " +
                      std::to_string(entries_[k].end) + " beyond x_" +
                      std::to_string(data.interval_count()));
    }
  }
}

std::vector<double> map_contraction_factors(const FuzzyDataSet& data,
                                            const AddressMap& address) {
  address.check_against(data);
  std::vector<double> c(address.size());
  for (std::size_t i = 1; i <= address.size(); ++i) {
    const auto& a = address[i];
    c[i - 1] = (data.x(i) - data.x(i - 1)) / (data.x(a.end) - data.x(a.start));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Scaling conditions

std::string_view to_string(ScalingCondition condition) noexcept {
  switch (condition) {
    case ScalingCondition::LengthDomination: return "length domination";
    case ScalingCondition::LowerNondecreasing: return "lower endpoint nondecreasing";
    case ScalingCondition::UpperNonincreasing: return "upper endpoint nonincreasing";
  }
  return "unknown";
}

bool ScalingReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<ScalingCheck> ScalingReport::failures() const {
  std::vector<ScalingCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
               [](const auto& c) { return !c.passed; });
  return out;
}

ScalingReport validate_scaling(const FuzzyDataSet& data, const AddressMap& address,
                               std::span<const double> alphas) {
  address.check_against(data);
  if (alphas.size() != address.size()) {
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(address.size()) +
                                             " scaling factors, got " +
                                             std::to_string(alphas.size()));
  }
  ScalingReport report;
  for (std::size_t i = 1; i <= address.size(); ++i) {
    const double alpha = alphas[i - 1];
    const ScalingPair pairs[2] = {{&data.u(i - 1), &data.u(address[i].start)},
                                  {&data.u(i), &data.u(address[i].end)}};

    const auto a1 = first_failure(pairs, alpha, [](double lo, double hi, double, double) {
      return hi - lo < -profile_tolerance(lo, hi);
    });
    const auto a2 = first_failure(pairs, alpha, [](double lo, double, double prev, double) {
      return lo < prev - profile_tolerance(lo, prev);
    });
    const auto a3 = first_failure(pairs, alpha, [](double, double hi, double, double prev) {
      return hi > prev + profile_tolerance(hi, prev);
    });
    report.checks.push_back({i, ScalingCondition::LengthDomination, !a1, a1});
    report.checks.push_back({i, ScalingCondition::LowerNondecreasing, !a2, a2});
    report.checks.push_back({i, ScalingCondition::UpperNonincreasing, !a3, a3});
  }
  return report;
}

double lipschitz_q(const FuzzyDataSet& data, const AddressMap& address,
                   std::span<const double> alphas, std::size_t i) {
  address.check_against(data);
  check_interval_index(i, address.size());
  const double alpha = alphas[i - 1];
  const auto& prev = data.u(i - 1);
  const auto& cur = data.u(i);
  const auto& first = data.u(address[i].start);
  const auto& last = data.u(address[i].end);

  // Endpoint differences u_{i-1} − αu_{s_i} and u_i − αu_{e_i} at λ = 0, 1.
  const auto left_diff = [&](double lambda) {
    const auto a = prev.level(lambda);
    const auto b = first.level(lambda);
    return Interval{a.lo - alpha * b.lo, a.hi - alpha * b.hi};
  };
  const auto right_diff = [&](double lambda) {
    const auto a = cur.level(lambda);
    const auto b = last.level(lambda);
    return Interval{a.lo - alpha * b.lo, a.hi - alpha * b.hi};
  };
  const auto l0 = left_diff(0.0);
  const auto l1 = left_diff(1.0);
  const auto r0 = right_diff(0.0);
  const auto r1 = right_diff(1.0);

  const double spread = std::max({std::abs(r1.hi - l0.hi), std::abs(r0.hi - l1.hi),
                                   std::abs(r1.lo - l0.lo), std::abs(r0.lo - l1.lo)});
  return spread / (data.x(i) - data.x(i - 1));
}

// ---------------------------------------------------------------------------
// Transition structure

StochasticMatrix::StochasticMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), entries_(std::move(row_major)) {
  if (entries_.size() != n_ * n_) {
    throw Error(ErrorCode::SizeMismatch, "matrix needs n*n entries");
  }
  for (double p : entries_) {
    if (!(p >= 0.0)) throw Error(ErrorCode::InvalidArgument, "negative matrix entry");
  }
}

TransitionStructure build_matrix(const FuzzyDataSet& data, const AddressMap& address) {
  address.check_against(data);
  const std::size_t n = address.size();
  TransitionStructure ts;
  ts.connections.resize(n);
  ts.coverage.assign(n, 0);

  // I_s = [x_{s-1}, x_s] ⊆ [x_start, x_end]  ⟺  start ≤ s−1 and s ≤ end.
  const auto contains = [&](std::size_t t, std::size_t s) {
    const auto& a = address[t];
    return a.start + 1 <= s && s <= a.end;
  };
  for (std::size_t t = 1; t <= n; ++t) {
    for (std::size_t s = 1; s <= n; ++s) {
      if (contains(t, s)) {
        ts.connections[t - 1].push_back(s);
        ++ts.coverage[s - 1];
      }
    }
  }
  std::vector<double> p(n * n, 0.0);
  for (std::size_t s = 1; s <= n; ++s) {
    if (ts.coverage[s - 1] == 0) {
      throw Error(ErrorCode::DanglingInterval,
                  "I_" + std::to_string(s) + " is contained in no address interval");
    }
    const double weight = 1.0 / static_cast<double>(ts.coverage[s - 1]);
    for (std::size_t t = 1; t <= n; ++t) {
      if (contains(t, s)) p[(s - 1) * n + (t - 1)] = weight;
    }
  }
  ts.matrix = StochasticMatrix(n, std::move(p));
  return ts;
}

namespace {

std::vector<bool> reachable_from_first(const StochasticMatrix& m, bool reverse) {
  const std::size_t n = m.size();
  std::vector<bool> seen(n, false);
  if (n == 0) return seen;
  std::vector<std::size_t> stack{1};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t t = 1; t <= n; ++t) {
      const double p = reverse ? m(t, s) : m(s, t);
      if (p > 0.0 && !seen[t - 1]) {
        seen[t - 1] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<std::size_t> unreachable_intervals(const StochasticMatrix& m) {
  const auto forward = reachable_from_first(m, false);
  const auto backward = reachable_from_first(m, true);
  std::vector<std::size_t> out;
  for (std::size_t s = 1; s <= m.size(); ++s) {
    if (!forward[s - 1] || !backward[s - 1]) out.push_back(s);
  }
  return out;
}

bool check_irreducible(const StochasticMatrix& m) {
  return m.size() > 0 && unreachable_intervals(m).empty();
}

// ---------------------------------------------------------------------------
// Contraction certificate

ContractionCertificate contraction_certificate(std::span<const double> map_factors,
                                               std::span<const double> lipschitz,
                                               std::span<const double> alphas,
                                               std::optional<double> theta) {
  if (map_factors.size() != lipschitz.size() || map_factors.size() != alphas.size() ||
      map_factors.empty()) {
    throw Error(ErrorCode::SizeMismatch, "certificate inputs must have equal, nonzero length");
  }
  const std::size_t n = map_factors.size();
  double c_max = 0.0;
  double lc_max = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    c_max = std::max(c_max, map_factors[k]);
    lc_max = std::max(lc_max, lipschitz[k] * map_factors[k]);
  }

  ContractionCertificate cert;
  cert.theta_max = lc_max > 0.0 ? (1.0 - c_max) / lc_max
                                : std::numeric_limits<double>::infinity();
  if (theta) {
    if (!(*theta > 0.0) || !std::isfinite(*theta)) {
      throw Error(ErrorCode::InvalidArgument, "theta must be positive and finite");
    }
    cert.theta = *theta;
  } else {
    cert.theta = std::isfinite(cert.theta_max) ? cert.theta_max / 2.0 : 1.0;
  }

  cert.map_factors.resize(n);
  cert.max_factor = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double c = map_factors[k];
    cert.map_factors[k] = std::max(c + cert.theta * lipschitz[k] * c, alphas[k]);
    cert.max_factor = std::max(cert.max_factor, cert.map_factors[k]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!(cert.map_factors[k] < 1.0)) {
      throw Error(ErrorCode::NotContractive,
                  "c_w" + std::to_string(k + 1) + " = " + num(cert.map_factors[k]) +
                      " >= 1 at theta = " + num(cert.theta) +
                      " (theta_max = " + num(cert.theta_max) + ")");
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Rifs

Rifs::Rifs(FuzzyDataSet data, AddressMap address, std::vector<double> alphas,
           RifsOptions options)
    : data_(std::move(data)),
      address_(std::move(address)),
      alphas_(std::move(alphas)),
      options_(options) {}

Rifs Rifs::build(FuzzyDataSet data, AddressMap address, std::vector<double> alphas,
                 RifsOptions options) {
  address.check_against(data);
  const std::size_t n = data.interval_count();
  if (alphas.size() != n) {
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(n) +
                                             " scaling factors, got " +
                                             std::to_string(alphas.size()));
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!(alphas[k] >= 0.0 && alphas[k] < 1.0)) {
      throw Error(ErrorCode::InvalidScalingFactor,
                  "alpha_" + std::to_string(k + 1) + " = " + num(alphas[k]) +
                      " not in [0, 1)");
    }
  }

  Rifs rifs(std::move(data), std::move(address), std::move(alphas), options);
  rifs.max_alpha_ = *std::max_element(rifs.alphas_.begin(), rifs.alphas_.end());
  rifs.map_factors_ = map_contraction_factors(rifs.data_, rifs.address_);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(rifs.map_factors_[k] < 1.0)) {
      throw Error(ErrorCode::NotContractive,
                  "l_" + std::to_string(k + 1) + " has contraction factor " +
                      num(rifs.map_factors_[k]) + " >= 1");
    }
  }

  const auto scaling = validate_scaling(rifs.data_, rifs.address_, rifs.alphas_);
  if (!scaling.ok()) {
    const auto f = scaling.failures().front();
    throw Error(ErrorCode::ScalingConditionsViolated,
                "interval " + std::to_string(f.interval) + " fails " +
                    std::string(to_string(f.condition)) + " at lambda = " +
                    num(f.offending_lambda.value_or(0.0)));
  }

  rifs.transitions_ = build_matrix(rifs.data_, rifs.address_);
  if (!check_irreducible(rifs.transitions_.matrix)) {
    std::string names;
    for (auto s : unreachable_intervals(rifs.transitions_.matrix)) {
      names += (names.empty() ? "" : ", ") + std::to_string(s);
    }
    throw Error(ErrorCode::NotIrreducible,
                "transition matrix is reducible; intervals not strongly connected with "
                "I_1: " + names);
  }

  rifs.lipschitz_.resize(n);
  for (std::size_t i = 1; i <= n; ++i) {
    rifs.lipschitz_[i - 1] = lipschitz_q(rifs.data_, rifs.address_, rifs.alphas_, i);
  }
  rifs.certificate_ = contraction_certificate(rifs.map_factors_, rifs.lipschitz_,
                                              rifs.alphas_, options.theta);
  return rifs;
}

double Rifs::max_lipschitz() const noexcept {
  return *std::max_element(lipschitz_.begin(), lipschitz_.end());
}

void Rifs::check_interval(std::size_t i) const {
  check_interval_index(i, interval_count());
}

Interval Rifs::address_interval(std::size_t i) const {
  check_interval(i);
  return {data_.x(address_[i].start), data_.x(address_[i].end)};
}

double Rifs::map_l(std::size_t i, double x) const {
  const auto dom = address_interval(i);
  x = clamp_into(x, dom.lo, dom.hi, "l_i");
  const double t = (x - dom.lo) / (dom.hi - dom.lo);
  return std::lerp(data_.x(i - 1), data_.x(i), t);
}

double Rifs::map_l_inv(std::size_t i, double x) const {
  const auto dom = address_interval(i);
  const double a = data_.x(i - 1);
  const double b = data_.x(i);
  x = clamp_into(x, a, b, "l_i^-1");
  const double t = (x - a) / (b - a);
  return std::lerp(dom.lo, dom.hi, t);
}

FuzzyNumber Rifs::q_map(std::size_t i, double x) const {
  check_interval(i);
  const double a = data_.x(i - 1);
  const double b = data_.x(i);
  x = clamp_into(x, a, b, "q_i");
  const auto& addr = address_[i];

  const double t = std::clamp((x - a) / (b - a), 0.0, 1.0);
  const auto interpolant = combine(t, data_.u(i), 1.0 - t, data_.u(i - 1));

  const auto dom = address_interval(i);
  const double y = map_l_inv(i, x);
  const double s = std::clamp((y - dom.lo) / (dom.hi - dom.lo), 0.0, 1.0);
  const auto subtrahend =
      scale(alphas_[i - 1], combine(s, data_.u(addr.end), 1.0 - s, data_.u(addr.start)));

  return hukuhara_diff(interpolant, subtrahend);
}

FuzzyNumber Rifs::f_map(std::size_t i, double x, const FuzzyNumber& u) const {
  return add(scale(alpha(i), u), q_map(i, map_l(i, x)));
}

std::pair<double, FuzzyNumber> Rifs::w_map(std::size_t i, double x,
                                           const FuzzyNumber& u) const {
  return {map_l(i, x), f_map(i, x, u)};
}

}  // namespace fuzzfrac
