#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fuzzfrac_cli/commands.hpp"

namespace {

template <typename T>
void optional_flag(CLI::App& cmd, const std::string& name, std::optional<T>& target,
                   const std::string& help) {
  cmd.add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fuzzfrac::cli;

  CLI::App app{"fuzzfrac: fuzzy-valued recurrent fractal interpolation"};
  app.require_subcommand(1);

  CommandOptions opts;
  std::vector<double> lambdas;

  const std::pair<const char*, const char*> commands[] = {
      {"validate", "Check a configuration and print the construction report"},
      {"solve", "Compute the interpolant and write levels.csv and iteration_report.txt"},
      {"plot", "Write level_sets.svg and fuzzy_graph.svg"},
      {"analyze", "Report Hölder parameters and check them on the solved function"},
      {"perturb", "Run a stability experiment and write stability_report.csv"},
  };
  for (const auto& [name, help] : commands) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--config", opts.config,
                    "Config file (JSON); 'example2' selects the bundled example")
        ->capture_default_str();
    cmd->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
    optional_flag(*cmd, "--tol", opts.tol, "Solver tolerance on the a-posteriori error");
    optional_flag(*cmd, "--grid-density", opts.grid_density, "Grid points per subinterval");
    optional_flag(*cmd, "--lambda-grid", opts.lambda_grid, "Number of lambda intervals");
    optional_flag(*cmd, "--seed", opts.seed, "Random seed");
    optional_flag(*cmd, "--kind", opts.kind,
                  "perturb_x | perturb_u | perturb_both | perturb_alpha");
    optional_flag(*cmd, "--size", opts.size, "Perturbation size");
    optional_flag(*cmd, "--index", opts.index,
                  "Perturb one component: node index, or interval index for perturb_alpha");
    cmd->add_option("--lambdas", lambdas, "Comma-separated lambda levels to export")
        ->delimiter(',');
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!lambdas.empty()) opts.lambdas = lambdas;

  const auto* chosen = app.get_subcommands().front();
  return run_command(chosen->get_name(), opts, std::cout, std::cerr);
}
