#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ushape/bigreal.hpp"
#include "ushape/families.hpp"
#include "ushape/records.hpp"

namespace ushape {

inline constexpr std::string_view kCsvHeader =
    "source,n_or_label,x,y,boundary,cos_theta,reg_L,disc_magnitude,precision_bits";

struct ShapeRow {
  std::string source;
  std::string n_or_label;
  std::string x;
  std::string y;
  std::string boundary;
  std::string cos_theta;  // may be empty
  std::string reg_L;
  std::string disc_magnitude;
  unsigned precision_bits = 0;
};

enum class NumberFormat { Decimal, Hex };

// 30 significant digits, or the exact hex-float of the full mantissa.
std::string format_number(const BigReal& v, NumberFormat fmt);

ShapeRow shape_row(const FamilyMember& m, const PrecisionContext& ctx, NumberFormat fmt = NumberFormat::Decimal);
ShapeRow shape_row(const FieldRecord& r, const RecordEvaluation& e, const PrecisionContext& ctx,
                   NumberFormat fmt = NumberFormat::Decimal);

// Header plus one LF-terminated line per row.
std::string emit_csv(const std::vector<ShapeRow>& rows);
// Throws MalformedInput on a wrong header or a malformed line.
std::vector<ShapeRow> parse_csv(std::string_view text);

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
};

// Viridis-like ramp, t ∈ [0, 1] (clamped). Luminance increases with t.
Rgb colormap(double t);
std::string to_hex_color(Rgb c);

enum class ColorBy { Disc, Source, Boundary };
// "disc", "source", "boundary"; throws DomainError otherwise.
ColorBy parse_color_by(std::string_view name);

struct SvgOptions {
  double y_max = 8.0;
  ColorBy color_by = ColorBy::Disc;
  int width = 480;
  int height = 720;
  double radius = 3.0;
};

// Outline of the fundamental domain (two lines and the lower arc) in
// <g id="domain">, one <circle> per row in <g id="points">.
// Throws EmptyPlot for no rows.
std::string emit_svg(const std::vector<ShapeRow>& rows, const SvgOptions& options);

}  // namespace ushape
