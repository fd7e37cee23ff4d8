#ifndef FUZZFRAC_CLI_CONFIG_HPP
#define FUZZFRAC_CLI_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <fuzzfrac/rifs.hpp>
#include <fuzzfrac/solver.hpp>

namespace fuzzfrac::cli {

// Malformed or schema-violating configuration. The message names the line
// (syntax errors) or the JSON pointer of the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TriangularOrdinate {
  double center;
  double left;
  double right;
};

using OrdinateSpec = std::variant<TriangularOrdinate, std::vector<FuzzyNumber::Breakpoint>>;

struct PointSpec {
  double x;
  OrdinateSpec u;
};

struct OutputOptions {
  std::vector<double> lambdas{0.5, 0.75, 1.0};
  int plot_width = 800;
  int plot_height = 480;
};

struct ProblemConfig {
  std::string name;
  std::size_t lambda_grid_size = kDefaultLambdaIntervals;
  std::vector<PointSpec> points;
  std::vector<AddressInterval> address;
  std::vector<double> alphas;
  std::optional<double> theta;
  SolveOptions solver;
  std::uint64_t seed = 1;
  double free_tau = 0.5;
  std::size_t holder_pairs = 10000;
  OutputOptions output;
};

ProblemConfig parse_config(std::string_view text, std::string_view source = "<config>");

// Reads a config file. The name "example2" resolves to the bundled config
// when no such file exists. Throws ConfigError for unreadable files.
ProblemConfig load_config(const std::filesystem::path& path);

std::string_view builtin_example2_json() noexcept;

// Domain construction; these throw fuzzfrac::Error.
FuzzyNumber make_ordinate(const OrdinateSpec& spec, std::size_t lambda_grid_size);
FuzzyDataSet make_dataset(const ProblemConfig& config);
Rifs build_rifs(const ProblemConfig& config);

}  // namespace fuzzfrac::cli

#endif  // FUZZFRAC_CLI_CONFIG_HPP
