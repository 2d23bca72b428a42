#include "ushape/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "ushape/errors.hpp"

namespace ushape {

namespace {

constexpr int kCsvDigits = 30;

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

double to_double_field(const std::string& s, const char* what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    throw MalformedInput(std::string("bad ") + what + " value '" + s + "'");
  }
  return v;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string format_number(const BigReal& v, NumberFormat fmt) {
  return fmt == NumberFormat::Hex ? v.to_hex() : v.to_decimal(kCsvDigits);
}

ShapeRow shape_row(const FamilyMember& m, const PrecisionContext& ctx, NumberFormat fmt) {
  ShapeRow row;
  row.source = std::string(family_name(m.family));
  row.n_or_label = std::to_string(m.n);
  row.x = format_number(m.shape.x, fmt);
  row.y = format_number(m.shape.y, fmt);
  row.boundary = classify_boundary(m.shape).name();
  row.cos_theta = format_number(m.witness.cos_theta, fmt);
  row.reg_L = format_number(m.regulator.reg_L, fmt);
  row.disc_magnitude = mpz_class(abs(m.discriminant)).get_str();
  row.precision_bits = ctx.bits;
  return row;
}

ShapeRow shape_row(const FieldRecord& r, const RecordEvaluation& e, const PrecisionContext& ctx,
                   NumberFormat fmt) {
  ShapeRow row;
  row.source = "record";
  row.n_or_label = r.label;
  row.x = format_number(e.shape.x, fmt);
  row.y = format_number(e.shape.y, fmt);
  row.boundary = classify_boundary(e.shape).name();
  const BigReal cos = dot(e.u, e.v) / sqrt(norm2(e.u) * norm2(e.v));
  row.cos_theta = format_number(cos, fmt);
  row.reg_L = format_number(e.reg_L, fmt);
  row.disc_magnitude = r.disc_magnitude;
  row.precision_bits = ctx.bits;
  return row;
}

std::string emit_csv(const std::vector<ShapeRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const ShapeRow& r : rows) {
    out += r.source + ',' + r.n_or_label + ',' + r.x + ',' + r.y + ',' + r.boundary + ',' + r.cos_theta + ',' +
           r.reg_L + ',' + r.disc_magnitude + ',' + std::to_string(r.precision_bits) + '\n';
  }
  return out;
}

std::vector<ShapeRow> parse_csv(std::string_view text) {
  std::vector<std::string> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (auto& l : lines) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
  }
  if (lines.empty() || lines.front() != kCsvHeader) {
    throw MalformedInput("CSV header must be '" + std::string(kCsvHeader) + "'");
  }
  std::vector<ShapeRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> f = split(lines[i], ',');
    if (f.size() != 9) {
      throw MalformedInput("CSV line " + std::to_string(i + 1) + " has " + std::to_string(f.size()) +
                           " fields, expected 9");
    }
    ShapeRow r{f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7], 0};
    char* end = nullptr;
    const unsigned long bits = std::strtoul(f[8].c_str(), &end, 10);
    if (f[8].empty() || *end != '\0') {
      throw MalformedInput("CSV line " + std::to_string(i + 1) + ": bad precision_bits");
    }
    r.precision_bits = static_cast<unsigned>(bits);
    rows.push_back(std::move(r));
  }
  return rows;
}

Rgb colormap(double t) {
  static constexpr std::array<std::array<double, 3>, 9> kAnchors = {{
      {68, 1, 84},
      {71, 44, 122},
      {59, 81, 139},
      {44, 113, 142},
      {33, 144, 141},
      {39, 173, 129},
      {92, 200, 99},
      {170, 220, 50},
      {253, 231, 37},
  }};
  if (!(t >= 0)) t = 0;
  t = std::min(t, 1.0);
  const double pos = t * (kAnchors.size() - 1);
  const auto lo = std::min<std::size_t>(static_cast<std::size_t>(pos), kAnchors.size() - 2);
  const double frac = pos - static_cast<double>(lo);
  auto channel = [&](std::size_t c) {
    const double v = kAnchors[lo][c] + frac * (kAnchors[lo + 1][c] - kAnchors[lo][c]);
    return static_cast<std::uint8_t>(std::lround(v));
  };
  return {channel(0), channel(1), channel(2)};
}

std::string to_hex_color(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

ColorBy parse_color_by(std::string_view name) {
  if (name == "disc") return ColorBy::Disc;
  if (name == "source") return ColorBy::Source;
  if (name == "boundary") return ColorBy::Boundary;
  throw DomainError("unknown color mode '" + std::string(name) + "' (disc, source, boundary)");
}

std::string emit_svg(const std::vector<ShapeRow>& rows, const SvgOptions& opt) {
  if (rows.empty()) {
    throw EmptyPlot("nothing to plot");
  }
  if (!(opt.y_max > 1.0)) {
    throw DomainError("y_max must exceed 1");
  }
  const double margin = 40;
  const double x_lo = -0.1, x_hi = 0.6;
  const double y_lo = 0.75, y_hi = opt.y_max + 0.25;
  const double plot_w = opt.width - 2 * margin;
  const double plot_h = opt.height - 2 * margin;
  const double sx = plot_w / (x_hi - x_lo);
  const double sy = plot_h / (y_hi - y_lo);
  auto px = [&](double x) { return margin + (x - x_lo) * sx; };
  auto py = [&](double y) { return opt.height - margin - (y - y_lo) * sy; };

  std::vector<double> xs, ys;
  for (const ShapeRow& r : rows) {
    xs.push_back(to_double_field(r.x, "x"));
    ys.push_back(std::min(to_double_field(r.y, "y"), opt.y_max));
  }

  std::vector<std::string> colors;
  if (opt.color_by == ColorBy::Disc) {
    std::vector<double> logs;
    for (const ShapeRow& r : rows) logs.push_back(std::log(std::max(to_double_field(r.disc_magnitude, "disc"), 1.0)));
    const auto [mn, mx] = std::minmax_element(logs.begin(), logs.end());
    for (const double l : logs) {
      const double t = *mx > *mn ? (l - *mn) / (*mx - *mn) : 0.5;
      colors.push_back(to_hex_color(colormap(t)));
    }
  } else {
    // Categories in order of first appearance, spread along the same ramp.
    std::map<std::string, std::size_t> index;
    std::vector<std::string> keys;
    for (const ShapeRow& r : rows) {
      const std::string& key = opt.color_by == ColorBy::Source ? r.source : r.boundary;
      if (index.emplace(key, keys.size()).second) keys.push_back(key);
    }
    for (const ShapeRow& r : rows) {
      const std::string& key = opt.color_by == ColorBy::Source ? r.source : r.boundary;
      const double t = keys.size() > 1 ? static_cast<double>(index[key]) / (keys.size() - 1) : 0.5;
      colors.push_back(to_hex_color(colormap(t)));
    }
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width << "\" height=\""
      << opt.height << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\"" << opt.height << "\" fill=\"#ffffff\"/>\n";

  const double rho_y = std::sqrt(3.0) / 2;
  svg << "<g id=\"domain\" fill=\"none\" stroke=\"#808080\" stroke-width=\"1.5\">\n";
  svg << "<line x1=\"" << fixed3(px(0)) << "\" y1=\"" << fixed3(py(1)) << "\" x2=\"" << fixed3(px(0)) << "\" y2=\""
      << fixed3(py(opt.y_max)) << "\"/>\n";
  svg << "<line x1=\"" << fixed3(px(0.5)) << "\" y1=\"" << fixed3(py(rho_y)) << "\" x2=\"" << fixed3(px(0.5))
      << "\" y2=\"" << fixed3(py(opt.y_max)) << "\"/>\n";
  svg << "<path d=\"M " << fixed3(px(0)) << ' ' << fixed3(py(1)) << " A " << fixed3(sx) << ' ' << fixed3(sy)
      << " 0 0 1 " << fixed3(px(0.5)) << ' ' << fixed3(py(rho_y)) << "\"/>\n";
  svg << "</g>\n";

  svg << "<g id=\"points\" stroke=\"none\">\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    svg << "<circle cx=\"" << fixed3(px(xs[i])) << "\" cy=\"" << fixed3(py(ys[i])) << "\" r=\"" << fixed3(opt.radius)
        << "\" fill=\"" << colors[i] << "\"><title>" << xml_escape(rows[i].source) << ' ' << xml_escape(rows[i].n_or_label)
        << "</title></circle>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace ushape
