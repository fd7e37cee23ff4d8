#include <random>
#include <string>

#include "fuzzfrac/errors.hpp"
#include "fuzzfrac/solver.hpp"

namespace fuzzfrac {
namespace {

// Uniform in [0, 1) from the top 53 bits; identical on every platform, unlike
// the standard distributions.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t draw_next(std::span<const double> row, std::mt19937_64& rng) {
  const double r = unit_uniform(rng);
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t t = 0; t < row.size(); ++t) {
    if (row[t] <= 0.0) continue;
    acc += row[t];
    last_positive = t;
    if (r < acc) return t + 1;
  }
  return last_positive + 1;
}

}  // namespace

std::vector<ChaosPoint> chaos_game(const Rifs& rifs, std::size_t steps, std::size_t burn_in,
                                   std::uint64_t seed) {
  if (steps <= burn_in) {
    throw Error(ErrorCode::InvalidArgument, "steps must exceed burn_in");
  }
  const auto& m = rifs.transitions().matrix;
  if (!check_irreducible(m)) {
    throw Error(ErrorCode::NotIrreducible, "chaos game needs an irreducible matrix");
  }

  std::mt19937_64 rng(seed);
  std::size_t state = 1;
  double x = rifs.data().x(0);
  FuzzyNumber u = rifs.data().u(0);

  std::vector<ChaosPoint> emitted;
  emitted.reserve(steps - burn_in);
  for (std::size_t step = 0; step < steps; ++step) {
    const std::size_t next = draw_next(m.row(state), rng);
    auto [nx, nu] = rifs.w_map(next, x, u);
    x = nx;
    u = std::move(nu);
    state = next;
    if (step >= burn_in) emitted.push_back({x, u, state});
  }
  return emitted;
}

}  // namespace fuzzfrac
