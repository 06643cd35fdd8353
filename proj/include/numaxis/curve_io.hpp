#pragma once

#include "numaxis/embedding.hpp"
#include "numaxis/geodesic.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace numaxis {

// Decimal rendering used by every emitter: 12 significant digits.
std::string format_decimal(double value);

/// CSV with header "x,y,region,branch"; branch is "+" or "-".
void write_curve_csv(std::ostream& out, std::span<const EmbeddingCurve> curves);
void write_curve_csv(const std::filesystem::path& path, std::span<const EmbeddingCurve> curves);

/// Parses a curve CSV back into curves, grouping consecutive rows that share
/// region and branch. x_c is not stored in the file; it is set to xc.
std::vector<EmbeddingCurve> read_curve_csv(std::istream& in, double xc = 1.0);

/// CSV with header "tau,t,x,ux,eps".
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& trajectory);

/// Standalone SVG: axes, one polyline per curve, region line styles
/// (I solid, II dash-dot, III dashed) and a legend.
std::string render_svg(std::span<const EmbeddingCurve> curves);
/// Worldlines drawn as t against x.
std::string render_svg(std::span<const Trajectory> trajectories);

void emit_svg(std::span<const EmbeddingCurve> curves, const std::filesystem::path& path);
void emit_svg(std::span<const Trajectory> trajectories, const std::filesystem::path& path);

}  // namespace numaxis
