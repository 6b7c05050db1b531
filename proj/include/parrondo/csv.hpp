#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "parrondo/engine.hpp"

namespace parrondo::io {

inline constexpr std::string_view kSeriesHeader = "t,mean_capital,stderr";
inline constexpr std::string_view kBoundaryHeader = "p3,p2";

/// 12 significant digits, '.' decimal separator, no locale.
std::string format_number(double v);

/// `t,mean_capital,stderr` rows for t = 0..t_max, '\n' line endings.
std::string series_csv(const engine::EnsembleStats& stats);

/// `samples` evenly spaced p3 values over [0, 1] with the fair-curve p2.
std::string boundary_csv(int m, int samples);

/// Minimal line chart: axes plus one polyline per series.
struct Series {
    std::string name;
    std::vector<double> y;
};
std::string line_chart_svg(std::string_view title, const std::vector<Series>& series);

/// Writes the whole file or throws IoError.
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace parrondo::io
