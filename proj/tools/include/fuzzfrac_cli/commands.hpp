#ifndef FUZZFRAC_CLI_COMMANDS_HPP
#define FUZZFRAC_CLI_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fuzzfrac::cli {

enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

// Command-line overrides; unset fields fall back to the config.
struct CommandOptions {
  std::filesystem::path config = "example2";
  std::filesystem::path out_dir = ".";
  std::optional<double> tol;
  std::optional<std::size_t> grid_density;
  std::optional<std::size_t> lambda_grid;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> kind;
  std::optional<double> size;
  std::optional<std::size_t> index;
  std::optional<std::vector<double>> lambdas;
};

int run_validate(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_solve(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_plot(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_analyze(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_perturb(const CommandOptions& opts, std::ostream& out, std::ostream& err);

// Dispatches on the subcommand name; unknown names give kExitUsage.
int run_command(const std::string& name, const CommandOptions& opts, std::ostream& out,
                std::ostream& err);

}  // namespace fuzzfrac::cli

#endif  // FUZZFRAC_CLI_COMMANDS_HPP
