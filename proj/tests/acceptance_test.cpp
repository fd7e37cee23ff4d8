// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Reference values come from the oracles in oracles.hpp, never from
// the library under test.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <fuzzfrac/analysis.hpp>
#include <fuzzfrac/errors.hpp>
#include <fuzzfrac/solver.hpp>
#include <fuzzfrac_cli/config.hpp>
#include <fuzzfrac_cli/output.hpp>

#include "oracles.hpp"
#include "test_support.hpp"

using namespace fuzzfrac;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// The bundled config, read from disk exactly as the tool reads it.
Rifs bundled() {
  return cli::build_rifs(cli::load_config(std::string(FUZZFRAC_DATA_DIR) + "/example2.json"));
}

const SolveOptions kSolve{64, 1e-8, 10000, 0};

Outcome lipschitz() {
  const auto r = bundled();
  const double expected[] = {6.0, 16.04, 18.6, 8.0};
  double worst = 0.0;
  for (std::size_t i = 1; i <= 4; ++i) {
    const double l = lipschitz_q(r.data(), r.address(), r.alphas(), i);
    worst = std::max(worst, std::abs(l - expected[i - 1]));
  }
  return {worst <= 1e-9, fmt("max |L - expected| = %.3g", worst)};
}

Outcome matrix() {
  const auto r = bundled();
  const auto ts = build_matrix(r.data(), r.address());
  const double expected[4][4] = {{0.5, 0, 0.5, 0},
                                 {0.25, 0.25, 0.25, 0.25},
                                 {0, 0.5, 0, 0.5},
                                 {0, 1, 0, 0}};
  bool exact = ts.matrix.size() == 4;
  for (std::size_t s = 1; exact && s <= 4; ++s) {
    for (std::size_t t = 1; t <= 4; ++t) exact = exact && ts.matrix(s, t) == expected[s - 1][t - 1];
  }
  // Independent derivation from the inclusion pattern.
  const auto brute = oracle::brute_matrix(oracle::kX, oracle::kAddress);
  for (std::size_t s = 0; exact && s < 4; ++s) {
    for (std::size_t t = 0; t < 4; ++t) exact = exact && brute[s][t] == expected[s][t];
  }
  const bool irreducible = check_irreducible(ts.matrix);
  return {exact && irreducible && oracle::strongly_connected(brute),
          fmt("entries exact: %s, irreducible: %s", exact ? "yes" : "no",
              irreducible ? "yes" : "no")};
}

Outcome holder_exponent() {
  const auto hp = holder_params(bundled());
  // δ = α/c_min with α = 0.65 and c_min = 1/3.
  const double delta = 0.65 * 3.0;
  const bool ok = std::abs(hp.delta - delta) <= 1e-12 &&
                  hp.holder_case == HolderCase::DeltaAboveOne &&
                  std::abs(hp.tau - 0.0365) <= 5e-4;
  return {ok, fmt("delta = %.15g, case %s, tau = %.6f", hp.delta,
                  std::string(to_string(hp.holder_case)).c_str(), hp.tau)};
}

Outcome interpolation() {
  const auto r = bundled();
  const auto sol = solve(r, kSolve);
  double worst = 0.0;
  for (std::size_t k = 0; k < 5; ++k) {
    const auto v = sol.function.evaluate(oracle::kX[k]);
    worst = std::max(worst, oracle::dense_d_inf([&](double l) { return oracle::tri_level(oracle::kU[k], l); },
                                                [&](double l) {
                                                  const auto iv = v.level(l);
                                                  return std::pair{iv.lo, iv.hi};
                                                }));
  }
  return {worst <= 1e-8,
          fmt("max node d_inf = %.3g after %zu iterations", worst, sol.report.iterations)};
}

Outcome fixed_point_residual() {
  const auto r = bundled();
  const auto coarse = solve(r, kSolve);
  const auto fine = solve(r, {128, kSolve.tol, kSolve.max_iter, 0});
  const double on_grid = residual(r, coarse.function);
  // Both solutions probed off their own grids on a shared finer grid.
  const auto probes = node_aligned_grid(r.data(), 1024);
  const double r64 = residual(r, coarse.function, probes);
  const double r128 = residual(r, fine.function, probes);
  return {on_grid <= 2e-8 && r128 < r64,
          fmt("on-grid %.3g; probe residual 64: %.4g, 128: %.4g", on_grid, r64, r128)};
}

Outcome contraction() {
  const auto r = bundled();
  const TransformOperator op(r, node_aligned_grid(r.data(), 64));
  testing_support::Rng rng(6);
  double worst = -1e300;
  for (int k = 0; k < 100; ++k) {
    const auto phi = testing_support::random_member(r, 64, rng);
    const auto psi = testing_support::random_member(r, 64, rng);
    const double lhs = metric_D(op.apply(phi), op.apply(psi));
    worst = std::max(worst, lhs - (0.65 * metric_D(phi, psi) + 1e-9));
  }
  return {worst <= 0.0, fmt("max excess over 0.65*D + 1e-9 = %.3g", worst)};
}

Outcome oracle_equivalence() {
  const auto r = bundled();
  const auto sol = solve(r, kSolve);
  const auto rec = oracle::example2_recursion(257);
  testing_support::Rng rng(7);
  const auto g = sol.function.grid();
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t j = rng.index(0, g.size() - 1);
    worst = std::max(worst, oracle::gap(rec(g[j], 30), sol.function.values()[j], rec.lambdas()));
  }
  return {worst <= 2e-6, fmt("max gap to depth-30 recursion = %.3g", worst)};
}

Outcome chaos() {
  const auto r = bundled();
  const auto sol = solve(r, {2048, kSolve.tol, kSolve.max_iter, 0});
  const auto pts = chaos_game(r, 1100, 1000, 2024);
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, d_inf(p.u, sol.function.evaluate(p.x)));
  return {pts.size() == 100 && worst <= 5e-3,
          fmt("%zu points, max d_inf = %.4g (solve density 2048)", pts.size(), worst)};
}

Outcome holder_bound() {
  const auto r = bundled();
  const auto sol = solve(r, kSolve);
  const auto hp = holder_params(r);
  const auto check = verify_holder(sol.function, hp, 10000, 9, 10 * kSolve.tol);
  return {check.pairs == 10000 && check.passed(),
          fmt("%zu violations in %zu pairs, worst ratio %.4g vs H = %.6g", check.violations,
              check.pairs, check.worst_ratio, hp.H)};
}

Outcome a_priori() {
  const auto r = bundled();
  const double d0 = distance_to_zero(solve(r, kSolve).function);
  const double b0 = a_priori_bound(r);
  bool ok = d0 <= b0;
  double tightest = d0 / b0;
  testing_support::Rng rng(10);
  for (int k = 0; k < 20; ++k) {
    const auto rr = testing_support::random_rifs(rng);
    const double d = distance_to_zero(solve(rr, {32, 1e-8, 100000, 0}).function);
    const double b = a_priori_bound(rr);
    ok = ok && d <= b;
    tightest = std::max(tightest, d / b);
  }
  return {ok, fmt("bundled D = %.5g <= %.5g; worst D/bound over 21 cases %.3g", d0, b0, tightest)};
}

Outcome stability() {
  const auto r = bundled();
  const auto original = solve(r, kSolve).function;
  const PerturbationKind kinds[] = {PerturbationKind::X, PerturbationKind::U,
                                    PerturbationKind::Both, PerturbationKind::Alpha};
  const double sizes[] = {1e-1, 1e-2, 1e-3};
  bool ok = true;
  std::ostringstream detail;
  for (auto kind : kinds) {
    std::vector<double> observed;
    detail << to_string(kind) << " [";
    for (double size : sizes) {
      try {
        const auto rep = run_perturbation_experiment(r, original, {kind, size, 1, {}}, kSolve);
        ok = ok && rep.passed();
        observed.push_back(rep.observed_D);
        detail << fmt(" %.3g/%.3g", rep.observed_D, rep.theoretical_bound);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::InadmissiblePerturbation) throw;
        detail << " skipped";
      }
    }
    for (std::size_t k = 1; k < observed.size(); ++k) ok = ok && observed[k] < observed[k - 1];
    detail << " ] ";
  }
  return {ok, detail.str()};
}

Outcome figure_tables() {
  const auto cfg = cli::load_config(std::string(FUZZFRAC_DATA_DIR) + "/example2.json");
  const auto r = cli::build_rifs(cfg);
  const auto sol = solve(r, kSolve);
  const std::vector<double> lambdas{0.5, 0.75, 1.0};
  std::stringstream csv;
  cli::write_levels_csv(csv, export_level_sets(sol.function, lambdas));
  const auto t = cli::read_levels_csv(csv);

  bool nested = t.lambdas == lambdas;
  double core_gap = 0.0;
  double node_gap = 0.0;
  for (std::size_t k = 0; nested && k < t.x.size(); ++k) {
    const auto& b5 = t.bands[0][k];
    const auto& b75 = t.bands[1][k];
    const auto& b1 = t.bands[2][k];
    nested = b5.lo < b75.lo && b75.lo < b1.lo && b1.hi < b75.hi && b75.hi < b5.hi;
    core_gap = std::max(core_gap, std::abs(b1.hi - b1.lo));
    for (std::size_t n = 0; n < 5; ++n) {
      if (t.x[k] != oracle::kX[n]) continue;
      for (std::size_t l = 0; l < 3; ++l) {
        node_gap = std::max({node_gap, std::abs(t.bands[l][k].lo - oracle::kU[n].lo(lambdas[l])),
                             std::abs(t.bands[l][k].hi - oracle::kU[n].hi(lambdas[l]))});
      }
    }
  }
  return {nested && core_gap <= 1e-10 && node_gap <= 1e-8,
          fmt("strict nesting: %s, core gap %.3g, node gap %.3g", nested ? "yes" : "no",
              core_gap, node_gap)};
}

Outcome arithmetic() {
  constexpr int kCases = 10000;
  constexpr double kTol = 1e-12;
  testing_support::Rng rng(13);
  int bad_add = 0, bad_scale = 0, bad_hukuhara = 0, bad_metric = 0;
  for (int k = 0; k < kCases; ++k) {
    const auto u = testing_support::random_fuzzy(rng);
    const auto v = testing_support::random_fuzzy(rng);
    const auto w = testing_support::random_fuzzy(rng);

    const auto s = add(u, v);
    bool ok = testing_support::profile_ok(s, kTol);
    for (double l : s.grid().levels()) {
      ok = ok && std::abs(s.level(l).lo - (u.level(l).lo + v.level(l).lo)) <= kTol &&
           std::abs(s.level(l).hi - (u.level(l).hi + v.level(l).hi)) <= kTol;
    }
    bad_add += ok ? 0 : 1;

    const double a = rng.uniform(0.0, 5.0);
    const auto sc = scale(a, u);
    ok = testing_support::profile_ok(sc, kTol);
    for (double l : u.grid().levels()) {
      ok = ok && std::abs(sc.level(l).lo - a * u.level(l).lo) <= kTol &&
           std::abs(sc.level(l).hi - a * u.level(l).hi) <= kTol;
    }
    bad_scale += ok ? 0 : 1;

    const auto back = hukuhara_diff(s, u);
    ok = testing_support::profile_ok(back, kTol) && testing_support::probe_gap(back, v) <= kTol;
    bad_hukuhara += ok ? 0 : 1;

    const double duv = d_inf(u, v);
    ok = d_inf(u, u) == 0.0 && duv == d_inf(v, u) && duv > 0.0 &&
         d_inf(u, w) <= duv + d_inf(v, w) + kTol &&
         std::abs(duv - testing_support::probe_gap(u, v)) <= kTol;
    bad_metric += ok ? 0 : 1;
  }
  return {bad_add + bad_scale + bad_hukuhara + bad_metric == 0,
          fmt("failures of %d each: add %d, scale %d, hukuhara %d, metric %d", kCases, bad_add,
              bad_scale, bad_hukuhara, bad_metric)};
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
  double time_limit_s;  // 0 = unbounded
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "lipschitz constants", lipschitz, 1.0},
      {2, "transition matrix", matrix, 1.0},
      {3, "holder exponent", holder_exponent, 1.0},
      {4, "interpolation", interpolation, 30.0},
      {5, "fixed-point residual", fixed_point_residual, 0.0},
      {6, "contraction", contraction, 0.0},
      {7, "oracle equivalence", oracle_equivalence, 0.0},
      {8, "chaos-game agreement", chaos, 0.0},
      {9, "holder bound", holder_bound, 0.0},
      {10, "a-priori bound", a_priori, 0.0},
      {11, "stability suite", stability, 300.0},
      {12, "level table properties", figure_tables, 0.0},
      {13, "fuzzy arithmetic properties", arithmetic, 0.0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && secs >= c.time_limit_s) {
      out.ok = false;
      out.detail += fmt(" (over time limit %.0f s)", c.time_limit_s);
    }
    std::printf("%s AC%d %s: %s [%.3f s]\n", out.ok ? "PASS" : "FAIL", c.id, c.title,
                out.detail.c_str(), secs);
    std::fflush(stdout);
    failed += out.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
