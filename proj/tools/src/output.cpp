#include "fuzzfrac_cli/output.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fuzzfrac::cli {
namespace {

constexpr double kMargin = 48.0;

std::string fmt_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string color_for(double lambda, std::size_t index) {
  if (lambda == 0.5) return "#d62728";
  if (lambda == 0.75) return "#2ca02c";
  if (lambda == 1.0) return "#1f77b4";
  static constexpr std::array<const char*, 4> kFallback{"#9467bd", "#8c564b", "#e377c2",
                                                        "#7f7f7f"};
  return kFallback[index % kFallback.size()];
}

struct Frame {
  double x_lo, x_hi, y_lo, y_hi;
  PlotSize size;

  double px(double x) const {
    return kMargin + (x - x_lo) / (x_hi - x_lo) * (size.width - 2 * kMargin);
  }
  double py(double y) const {
    return size.height - kMargin - (y - y_lo) / (y_hi - y_lo) * (size.height - 2 * kMargin);
  }
};

Frame make_frame(double x_lo, double x_hi, double y_lo, double y_hi, PlotSize size) {
  if (!(y_hi > y_lo)) {
    y_lo -= 0.5;
    y_hi += 0.5;
  }
  const double pad = 0.05 * (y_hi - y_lo);
  if (!(x_hi > x_lo)) x_hi = x_lo + 1.0;
  return {x_lo, x_hi, y_lo - pad, y_hi + pad, size};
}

void open_svg(std::ostream& out, const Frame& f, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.size.width
      << "\" height=\"" << f.size.height << "\" viewBox=\"0 0 " << f.size.width << ' '
      << f.size.height << "\">\n";
  out << "<title>" << title << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double l = kMargin;
  const double r = f.size.width - kMargin;
  const double t = kMargin;
  const double b = f.size.height - kMargin;
  out << "<path d=\"M" << fmt_coord(l) << ' ' << fmt_coord(t) << " V" << fmt_coord(b) << " H"
      << fmt_coord(r) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  auto label = [&](double x, double y, const std::string& text, const char* anchor) {
    out << "<text x=\"" << fmt_coord(x) << "\" y=\"" << fmt_coord(y)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"" << anchor << "\">"
        << text << "</text>\n";
  };
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", f.x_lo);
  label(l, b + 16, buf, "middle");
  std::snprintf(buf, sizeof buf, "%g", f.x_hi);
  label(r, b + 16, buf, "middle");
  std::snprintf(buf, sizeof buf, "%.3g", f.y_lo);
  label(l - 6, b, buf, "end");
  std::snprintf(buf, sizeof buf, "%.3g", f.y_hi);
  label(l - 6, t + 4, buf, "end");
}

void polyline(std::ostream& out, const Frame& f, const std::vector<double>& xs,
              const std::vector<double>& ys, const std::string& color, const char* dash) {
  out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\"";
  if (dash != nullptr) out << " stroke-dasharray=\"" << dash << "\"";
  out << " points=\"";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k != 0) out << ' ';
    out << fmt_coord(f.px(xs[k])) << ',' << fmt_coord(f.py(ys[k]));
  }
  out << "\"/>\n";
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_double(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::runtime_error("line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_levels_csv(std::ostream& out, const LevelTable& table) {
  out << 'x';
  for (double l : table.lambdas) {
    out << ",lower@" << format_number(l) << ",upper@" << format_number(l);
  }
  out << '\n';
  for (std::size_t k = 0; k < table.x.size(); ++k) {
    out << format_number(table.x[k]);
    for (const auto& band : table.bands) {
      out << ',' << format_number(band[k].lo) << ',' << format_number(band[k].hi);
    }
    out << '\n';
  }
}

LevelTable read_levels_csv(std::istream& in) {
  LevelTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty levels table");
  const auto header = split(line);
  if (header.empty() || header[0] != "x" || header.size() % 2 != 1) {
    throw std::runtime_error("line 1: expected header x,lower@L,upper@L,...");
  }
  for (std::size_t c = 1; c < header.size(); c += 2) {
    const std::string lo = header[c];
    const std::string hi = header[c + 1];
    if (lo.rfind("lower@", 0) != 0 || hi.rfind("upper@", 0) != 0 || lo.substr(6) != hi.substr(6)) {
      throw std::runtime_error("line 1: malformed column pair " + lo + "," + hi);
    }
    table.lambdas.push_back(parse_double(lo.substr(6), 1));
  }
  table.bands.resize(table.lambdas.size());
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(header.size()) + " cells");
    }
    table.x.push_back(parse_double(cells[0], line_no));
    for (std::size_t l = 0; l < table.lambdas.size(); ++l) {
      table.bands[l].push_back(
          {parse_double(cells[1 + 2 * l], line_no), parse_double(cells[2 + 2 * l], line_no)});
    }
  }
  return table;
}

void write_level_svg(std::ostream& out, const LevelTable& table, PlotSize size) {
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -y_lo;
  for (const auto& band : table.bands) {
    for (const auto& iv : band) {
      y_lo = std::min(y_lo, iv.lo);
      y_hi = std::max(y_hi, iv.hi);
    }
  }
  if (table.x.empty() || table.bands.empty()) {
    y_lo = 0.0;
    y_hi = 1.0;
  }
  const Frame f = make_frame(table.x.empty() ? 0.0 : table.x.front(),
                             table.x.empty() ? 1.0 : table.x.back(), y_lo, y_hi, size);
  open_svg(out, f, "level sets");

  for (std::size_t l = 0; l < table.lambdas.size(); ++l) {
    std::vector<double> lo;
    std::vector<double> hi;
    for (const auto& iv : table.bands[l]) {
      lo.push_back(iv.lo);
      hi.push_back(iv.hi);
    }
    const auto color = color_for(table.lambdas[l], l);
    polyline(out, f, table.x, lo, color, nullptr);
    polyline(out, f, table.x, hi, color, "4 2");

    const double ly = kMargin + 14.0 * static_cast<double>(l);
    out << "<text x=\"" << fmt_coord(size.width - kMargin) << "\" y=\"" << fmt_coord(ly)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\" fill=\"" << color
        << "\">lambda = " << format_number(table.lambdas[l]) << "</text>\n";
  }
  out << "</svg>\n";
}

void write_fuzzy_graph_svg(std::ostream& out, const SampledFuzzyFunction& fn, PlotSize size) {
  const auto xs = fn.grid();
  std::vector<double> support_lo;
  std::vector<double> support_hi;
  std::vector<double> core_mid;
  for (const auto& v : fn.values()) {
    const auto s = v.support();
    const auto c = v.core();
    support_lo.push_back(s.lo);
    support_hi.push_back(s.hi);
    core_mid.push_back(0.5 * (c.lo + c.hi));
  }
  const Frame f = make_frame(xs.front(), xs.back(),
                             *std::min_element(support_lo.begin(), support_lo.end()),
                             *std::max_element(support_hi.begin(), support_hi.end()), size);
  open_svg(out, f, "fuzzy graph");

  out << "<polygon fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"none\" points=\"";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    out << (k == 0 ? "" : " ") << fmt_coord(f.px(xs[k])) << ',' << fmt_coord(f.py(support_hi[k]));
  }
  for (std::size_t k = xs.size(); k-- > 0;) {
    out << ' ' << fmt_coord(f.px(xs[k])) << ',' << fmt_coord(f.py(support_lo[k]));
  }
  out << "\"/>\n";
  polyline(out, f, {xs.begin(), xs.end()}, core_mid, "#08306b", nullptr);
  out << "</svg>\n";
}

}  // namespace fuzzfrac::cli
