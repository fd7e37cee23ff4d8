#include "fuzzfrac_cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fuzzfrac::cli {
namespace {

using nlohmann::json;

constexpr std::string_view kExample2 = R"({
  "name": "example2",
  "lambda_grid_size": 64,
  "points": [
    {"x": 0.0,  "u": {"triangular": [2, 2, 2]}},
    {"x": 0.25, "u": {"triangular": [3, 1, 1]}},
    {"x": 0.5,  "u": {"triangular": [5, 3, 3]}},
    {"x": 0.75, "u": {"triangular": [4, 2, 2]}},
    {"x": 1.0,  "u": {"triangular": [5, 1, 1]}}
  ],
  "address": [[0, 2], [1, 4], [0, 2], [1, 3]],
  "alphas": [0.3, 0.33, 0.65, 0.5],
  "solver": {"grid_density": 64, "tol": 1e-8, "max_iter": 10000},
  "seed": 1,
  "holder": {"free_tau": 0.5, "pairs": 10000},
  "output": {"lambdas": [0.5, 0.75, 1.0], "plot_width": 800, "plot_height": 480}
}
)";

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError((path.empty() ? std::string("/") : path) + ": " + what);
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(path + "/" + key, "unknown field");
    }
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + "/" + key, "missing required field");
  return *it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number, got " + std::string(v.type_name()));
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail(path, "number must be finite");
  return d;
}

std::uint64_t as_count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    fail(path, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array, got " + std::string(v.type_name()));
  return v;
}

const json& as_object(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object, got " + std::string(v.type_name()));
  return v;
}

std::vector<double> number_list(const json& v, const std::string& path) {
  std::vector<double> out;
  const auto& arr = as_array(v, path);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    out.push_back(as_number(arr[k], path + "/" + std::to_string(k)));
  }
  return out;
}

OrdinateSpec parse_ordinate(const json& v, const std::string& path) {
  as_object(v, path);
  reject_unknown(v, path, {"triangular", "breakpoints"});
  const bool tri = v.contains("triangular");
  const bool brk = v.contains("breakpoints");
  if (tri == brk) fail(path, "give exactly one of \"triangular\" or \"breakpoints\"");
  if (tri) {
    const auto p = number_list(v["triangular"], path + "/triangular");
    if (p.size() != 3) fail(path + "/triangular", "expected [center, left, right]");
    return TriangularOrdinate{p[0], p[1], p[2]};
  }
  std::vector<FuzzyNumber::Breakpoint> pts;
  const auto& arr = as_array(v["breakpoints"], path + "/breakpoints");
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const auto item_path = path + "/breakpoints/" + std::to_string(k);
    const auto p = number_list(arr[k], item_path);
    if (p.size() != 3) fail(item_path, "expected [lambda, lo, hi]");
    pts.push_back({p[0], p[1], p[2]});
  }
  return pts;
}

std::string locate_offset(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

std::string_view builtin_example2_json() noexcept { return kExample2; }

ProblemConfig parse_config(std::string_view text, std::string_view source) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string(source) + ": " + locate_offset(text, e.byte) +
                      ": malformed JSON");
  }

  ProblemConfig cfg;
  const std::string top;
  as_object(root, top);
  reject_unknown(root, top, {"name", "lambda_grid_size", "points", "address", "alphas", "theta",
                             "solver", "seed", "holder", "output"});

  if (root.contains("name")) {
    if (!root["name"].is_string()) fail("/name", "expected a string");
    cfg.name = root["name"].get<std::string>();
  }
  if (root.contains("lambda_grid_size")) {
    cfg.lambda_grid_size = as_count(root["lambda_grid_size"], "/lambda_grid_size");
    if (cfg.lambda_grid_size == 0) fail("/lambda_grid_size", "must be at least 1");
  }

  const auto& points = as_array(require(root, top, "points"), "/points");
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto path = "/points/" + std::to_string(k);
    as_object(points[k], path);
    reject_unknown(points[k], path, {"x", "u"});
    cfg.points.push_back({as_number(require(points[k], path, "x"), path + "/x"),
                          parse_ordinate(require(points[k], path, "u"), path + "/u")});
  }

  const auto& address = as_array(require(root, top, "address"), "/address");
  for (std::size_t k = 0; k < address.size(); ++k) {
    const auto path = "/address/" + std::to_string(k);
    const auto& pair = as_array(address[k], path);
    if (pair.size() != 2) fail(path, "expected [start, end] node indices");
    cfg.address.push_back({static_cast<std::size_t>(as_count(pair[0], path + "/0")),
                           static_cast<std::size_t>(as_count(pair[1], path + "/1"))});
  }

  cfg.alphas = number_list(require(root, top, "alphas"), "/alphas");
  if (root.contains("theta")) cfg.theta = as_number(root["theta"], "/theta");

  if (root.contains("solver")) {
    const auto& s = as_object(root["solver"], "/solver");
    reject_unknown(s, "/solver", {"grid_density", "tol", "max_iter"});
    if (s.contains("grid_density")) {
      cfg.solver.grid_density = as_count(s["grid_density"], "/solver/grid_density");
      if (cfg.solver.grid_density == 0) fail("/solver/grid_density", "must be at least 1");
    }
    if (s.contains("tol")) {
      cfg.solver.tol = as_number(s["tol"], "/solver/tol");
      if (!(cfg.solver.tol > 0.0)) fail("/solver/tol", "must be positive");
    }
    if (s.contains("max_iter")) cfg.solver.max_iter = as_count(s["max_iter"], "/solver/max_iter");
  }
  if (root.contains("seed")) cfg.seed = as_count(root["seed"], "/seed");

  if (root.contains("holder")) {
    const auto& h = as_object(root["holder"], "/holder");
    reject_unknown(h, "/holder", {"free_tau", "pairs"});
    if (h.contains("free_tau")) {
      cfg.free_tau = as_number(h["free_tau"], "/holder/free_tau");
      if (!(cfg.free_tau > 0.0 && cfg.free_tau < 1.0)) fail("/holder/free_tau", "must lie in (0, 1)");
    }
    if (h.contains("pairs")) cfg.holder_pairs = as_count(h["pairs"], "/holder/pairs");
  }

  if (root.contains("output")) {
    const auto& o = as_object(root["output"], "/output");
    reject_unknown(o, "/output", {"lambdas", "plot_width", "plot_height"});
    if (o.contains("lambdas")) {
      cfg.output.lambdas = number_list(o["lambdas"], "/output/lambdas");
      for (std::size_t k = 0; k < cfg.output.lambdas.size(); ++k) {
        const double l = cfg.output.lambdas[k];
        if (!(l >= 0.0 && l <= 1.0)) fail("/output/lambdas/" + std::to_string(k), "must lie in [0, 1]");
      }
    }
    for (const char* key : {"plot_width", "plot_height"}) {
      if (!o.contains(key)) continue;
      const auto path = std::string("/output/") + key;
      const auto v = as_count(o[key], path);
      if (v < 100 || v > 10000) fail(path, "must lie in [100, 10000]");
      (std::string_view(key) == "plot_width" ? cfg.output.plot_width : cfg.output.plot_height) =
          static_cast<int>(v);
    }
  }
  return cfg;
}

ProblemConfig load_config(const std::filesystem::path& path) {
  std::error_code ec;
  if (path == "example2" && !std::filesystem::exists(path, ec)) {
    return parse_config(kExample2, "example2");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

FuzzyNumber make_ordinate(const OrdinateSpec& spec, std::size_t lambda_grid_size) {
  if (const auto* t = std::get_if<TriangularOrdinate>(&spec)) {
    return FuzzyNumber::triangular(t->center, t->left, t->right, lambda_grid_size);
  }
  return FuzzyNumber::from_breakpoints(std::get<std::vector<FuzzyNumber::Breakpoint>>(spec),
                                       lambda_grid_size);
}

FuzzyDataSet make_dataset(const ProblemConfig& config) {
  std::vector<DataPoint> points;
  points.reserve(config.points.size());
  for (const auto& p : config.points) {
    points.push_back({p.x, make_ordinate(p.u, config.lambda_grid_size)});
  }
  return FuzzyDataSet(std::move(points));
}

Rifs build_rifs(const ProblemConfig& config) {
  return Rifs::build(make_dataset(config), AddressMap(config.address), config.alphas,
                     RifsOptions{config.theta});
}

}  // namespace fuzzfrac::cli
