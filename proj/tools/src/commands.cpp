#include "fuzzfrac_cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>

#include <fuzzfrac/analysis.hpp>
#include <fuzzfrac/errors.hpp>

#include "fuzzfrac_cli/config.hpp"
#include "fuzzfrac_cli/output.hpp"

namespace fuzzfrac::cli {
namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string join(std::span<const double> values) {
  std::string s;
  for (double v : values) s += (s.empty() ? "" : ", ") + num(v);
  return s;
}

ProblemConfig resolve_config(const CommandOptions& opts) {
  auto cfg = load_config(opts.config);
  if (opts.tol) {
    if (!(*opts.tol > 0.0)) throw ConfigError("--tol: must be positive");
    cfg.solver.tol = *opts.tol;
  }
  if (opts.grid_density) {
    if (*opts.grid_density == 0) throw ConfigError("--grid-density: must be at least 1");
    cfg.solver.grid_density = *opts.grid_density;
  }
  if (opts.lambda_grid) {
    if (*opts.lambda_grid == 0) throw ConfigError("--lambda-grid: must be at least 1");
    cfg.lambda_grid_size = *opts.lambda_grid;
  }
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.lambdas) {
    for (double l : *opts.lambdas) {
      if (!(l >= 0.0 && l <= 1.0)) throw ConfigError("--lambdas: values must lie in [0, 1]");
    }
    cfg.output.lambdas = *opts.lambdas;
  }
  return cfg;
}

std::ofstream open_output(const fs::path& dir, const char* name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + (dir / name).string());
  return f;
}

// Runs body, mapping failures onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitDomain;
  }
}

struct Solved {
  ProblemConfig cfg;
  Rifs rifs;
  Solution solution;
};

Solved load_and_solve(const CommandOptions& opts) {
  auto cfg = resolve_config(opts);
  auto rifs = build_rifs(cfg);
  auto solution = solve(rifs, cfg.solver);
  return {std::move(cfg), std::move(rifs), std::move(solution)};
}

void write_iteration_report(std::ostream& out, const Solved& s) {
  const auto& r = s.solution.report;
  const auto& data = s.rifs.data();
  out << "config: " << (s.cfg.name.empty() ? "(unnamed)" : s.cfg.name) << '\n';
  out << "grid density: " << s.cfg.solver.grid_density << " points per subinterval\n";
  out << "grid points: " << s.solution.function.size() << '\n';
  out << "lambda grid intervals: " << s.cfg.lambda_grid_size << '\n';
  out << "tolerance: " << format_number(s.cfg.solver.tol) << '\n';
  out << "alpha: " << format_number(r.alpha) << '\n';
  out << "iterations: " << r.iterations << '\n';
  out << "a-posteriori error: " << format_number(r.a_posteriori_error) << '\n';
  out << "final residual: " << format_number(r.final_residual) << '\n';
  out << "node interpolation error:\n";
  for (std::size_t k = 0; k < data.node_count(); ++k) {
    out << "  x_" << k << " = " << format_number(data.x(k)) << ": "
        << format_number(d_inf(s.solution.function.evaluate(data.x(k)), data.u(k))) << '\n';
  }
  out << "successive D:\n";
  for (std::size_t k = 0; k < r.successive_D.size(); ++k) {
    out << "  " << (k + 1) << ' ' << format_number(r.successive_D[k]) << '\n';
  }
}

}  // namespace

int run_validate(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto cfg = resolve_config(opts);
    bool ok = true;
    auto check = [&](const char* name, const std::function<void()>& body) {
      if (!ok) return;
      try {
        body();
        out << "[PASS] " << name << '\n';
      } catch (const Error& e) {
        out << "[FAIL] " << name << ": " << e.what() << '\n';
        ok = false;
      }
    };

    std::optional<FuzzyDataSet> data;
    std::optional<AddressMap> address;
    std::vector<double> c_l;
    std::optional<TransitionStructure> transitions;
    std::vector<double> lipschitz;

    check("data set", [&] {
      data.emplace(make_dataset(cfg));
      out << "  " << data->node_count() << " points on [" << num(data->domain().lo) << ", "
          << num(data->domain().hi) << "]\n";
    });
    check("address map", [&] {
      address.emplace(cfg.address);
      address->check_against(*data);
    });
    check("scaling factors", [&] {
      if (cfg.alphas.size() != data->interval_count()) {
        throw Error(ErrorCode::SizeMismatch,
                    "expected " + std::to_string(data->interval_count()) +
                        " scaling factors, got " + std::to_string(cfg.alphas.size()));
      }
      for (std::size_t i = 0; i < cfg.alphas.size(); ++i) {
        if (!(cfg.alphas[i] >= 0.0 && cfg.alphas[i] < 1.0)) {
          throw Error(ErrorCode::InvalidScalingFactor,
                      "alpha_" + std::to_string(i + 1) + " = " + num(cfg.alphas[i]) +
                          " outside [0, 1)");
        }
      }
      out << "  alpha = " << join(cfg.alphas) << '\n';
    });
    check("abscissa contraction", [&] {
      c_l = map_contraction_factors(*data, *address);
      out << "  c_l = " << join(c_l) << '\n';
      for (std::size_t i = 0; i < c_l.size(); ++i) {
        if (!(c_l[i] < 1.0)) {
          throw Error(ErrorCode::NotContractive,
                      "c_l_" + std::to_string(i + 1) + " = " + num(c_l[i]) + " >= 1");
        }
      }
    });
    check("scaling conditions", [&] {
      const auto report = validate_scaling(*data, *address, cfg.alphas);
      for (const auto& f : report.failures()) {
        out << "  interval " << f.interval << ": " << to_string(f.condition);
        if (f.offending_lambda) out << " fails at lambda = " << num(*f.offending_lambda);
        out << '\n';
      }
      if (!report.ok()) {
        throw Error(ErrorCode::ScalingConditionsViolated,
                    std::to_string(report.failures().size()) + " condition(s) violated");
      }
    });
    check("transition matrix", [&] {
      transitions.emplace(build_matrix(*data, *address));
      const auto& m = transitions->matrix;
      for (std::size_t s = 1; s <= m.size(); ++s) out << "  [" << join(m.row(s)) << "]\n";
    });
    check("irreducibility", [&] {
      if (!check_irreducible(transitions->matrix)) {
        std::string names;
        for (auto s : unreachable_intervals(transitions->matrix)) {
          names += (names.empty() ? "" : ", ") + std::to_string(s);
        }
        throw Error(ErrorCode::NotIrreducible,
                    "intervals not strongly connected with I_1: " + names);
      }
    });
    check("lipschitz constants", [&] {
      for (std::size_t i = 1; i <= data->interval_count(); ++i) {
        lipschitz.push_back(lipschitz_q(*data, *address, cfg.alphas, i));
      }
      out << "  L = " << join(lipschitz) << '\n';
    });
    check("contraction certificate", [&] {
      const auto cert = contraction_certificate(c_l, lipschitz, cfg.alphas, cfg.theta);
      out << "  theta_max = " << num(cert.theta_max) << '\n';
      out << "  theta = " << num(cert.theta) << '\n';
      out << "  c_w = " << join(cert.map_factors) << '\n';
    });

    out << (ok ? "valid\n" : "invalid\n");
    return ok ? kExitOk : kExitDomain;
  });
}

int run_solve(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto s = load_and_solve(opts);
    const auto table = export_level_sets(s.solution.function, s.cfg.output.lambdas);
    {
      auto f = open_output(opts.out_dir, "levels.csv");
      write_levels_csv(f, table);
    }
    {
      auto f = open_output(opts.out_dir, "iteration_report.txt");
      write_iteration_report(f, s);
    }
    out << "converged in " << s.solution.report.iterations << " iterations, residual "
        << format_number(s.solution.report.final_residual) << '\n';
    out << "wrote " << (opts.out_dir / "levels.csv").string() << '\n';
    out << "wrote " << (opts.out_dir / "iteration_report.txt").string() << '\n';
    return kExitOk;
  });
}

int run_plot(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto s = load_and_solve(opts);
    const PlotSize size{s.cfg.output.plot_width, s.cfg.output.plot_height};
    {
      auto f = open_output(opts.out_dir, "level_sets.svg");
      write_level_svg(f, export_level_sets(s.solution.function, s.cfg.output.lambdas), size);
    }
    {
      auto f = open_output(opts.out_dir, "fuzzy_graph.svg");
      write_fuzzy_graph_svg(f, s.solution.function, size);
    }
    out << "wrote " << (opts.out_dir / "level_sets.svg").string() << '\n';
    out << "wrote " << (opts.out_dir / "fuzzy_graph.svg").string() << '\n';
    return kExitOk;
  });
}

int run_analyze(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto s = load_and_solve(opts);
    const auto hp = holder_params(s.rifs, s.cfg.free_tau);
    const double slack = 10.0 * s.cfg.solver.tol;
    const auto check =
        verify_holder(s.solution.function, hp, s.cfg.holder_pairs, s.cfg.seed, slack);

    out << "alpha = " << num(hp.alpha) << '\n';
    out << "c_min = " << num(hp.c_min) << ", c_max = " << num(hp.c_max) << '\n';
    out << "|I|_min = " << num(hp.I_min) << ", |I|_max = " << num(hp.I_max) << '\n';
    out << "L_q = " << num(hp.L_q) << '\n';
    out << "delta = " << num(hp.delta) << '\n';
    out << "case = " << to_string(hp.holder_case) << '\n';
    out << "tau = " << num(hp.tau) << '\n';
    out << "M = " << num(hp.M_bound) << ", N = " << num(hp.N_bound) << '\n';
    out << "Q = " << num(hp.Q) << '\n';
    out << "H = " << num(hp.H) << '\n';
    out << "a-priori bound on D(f, 0) = " << num(a_priori_bound(s.rifs)) << '\n';
    out << "observed D(f, 0) = " << num(distance_to_zero(s.solution.function)) << '\n';
    out << "holder check: " << check.pairs << " pairs, " << check.violations
        << " violations, worst ratio " << num(check.worst_ratio) << " (bound " << num(hp.H)
        << ", slack " << num(slack) << ")\n";
    return check.passed() ? kExitOk : kExitDomain;
  });
}

int run_perturb(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!opts.kind) throw ConfigError("--kind is required for perturb");
    const auto kind = parse_perturbation_kind(*opts.kind);
    if (!kind) {
      throw ConfigError("--kind: expected perturb_x, perturb_u, perturb_both or perturb_alpha");
    }
    const auto cfg = resolve_config(opts);
    const auto rifs = build_rifs(cfg);
    const PerturbationRequest request{*kind, opts.size.value_or(0.01), cfg.seed, opts.index};
    const auto report = run_perturbation_experiment(rifs, request, cfg.solver);

    {
      auto f = open_output(opts.out_dir, "stability_report.csv");
      f << "kind,size,theoretical_bound,observed_D,slack,margin\n";
      f << to_string(report.kind) << ',' << format_number(report.perturbation_size) << ','
        << format_number(report.theoretical_bound) << ',' << format_number(report.observed_D)
        << ',' << format_number(report.slack) << ',' << format_number(report.margin) << '\n';
    }
    out << to_string(report.kind) << " size " << num(report.perturbation_size) << ": bound "
        << num(report.theoretical_bound) << ", observed " << num(report.observed_D)
        << ", margin " << num(report.margin) << (report.passed() ? "" : " (VIOLATED)") << '\n';
    return report.passed() ? kExitOk : kExitDomain;
  });
}

int run_command(const std::string& name, const CommandOptions& opts, std::ostream& out,
                std::ostream& err) {
  if (name == "validate") return run_validate(opts, out, err);
  if (name == "solve") return run_solve(opts, out, err);
  if (name == "plot") return run_plot(opts, out, err);
  if (name == "analyze") return run_analyze(opts, out, err);
  if (name == "perturb") return run_perturb(opts, out, err);
  err << "unknown command '" << name << "'\n";
  return kExitUsage;
}

}  // namespace fuzzfrac::cli
