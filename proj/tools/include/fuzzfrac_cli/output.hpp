#ifndef FUZZFRAC_CLI_OUTPUT_HPP
#define FUZZFRAC_CLI_OUTPUT_HPP

#include <istream>
#include <ostream>
#include <string>

#include <fuzzfrac/sampled_function.hpp>

namespace fuzzfrac::cli {

// %.17g; round-trips every double.
std::string format_number(double v);

// Header "x,lower@<λ>,upper@<λ>,..." then one row per grid point, LF endings.
void write_levels_csv(std::ostream& out, const LevelTable& table);

// Inverse of write_levels_csv. Throws std::runtime_error on malformed input.
LevelTable read_levels_csv(std::istream& in);

struct PlotSize {
  int width = 800;
  int height = 480;
};

// Lower and upper curves per λ; λ = 0.5, 0.75, 1 get red, green, blue.
void write_level_svg(std::ostream& out, const LevelTable& table, PlotSize size);

// Shaded region between f⁻(0) and f⁺(0) with the core curve on top.
void write_fuzzy_graph_svg(std::ostream& out, const SampledFuzzyFunction& f, PlotSize size);

}  // namespace fuzzfrac::cli

#endif  // FUZZFRAC_CLI_OUTPUT_HPP
