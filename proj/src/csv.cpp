#include "parrondo/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "parrondo/analysis.hpp"

namespace parrondo::io {

std::string format_number(double v) {
    if (v == 0.0) {
        v = 0.0; // drop the sign of -0
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string series_csv(const engine::EnsembleStats& stats) {
    std::string out(kSeriesHeader);
    out += '\n';
    for (std::size_t t = 0; t < stats.mean.size(); ++t) {
        out += std::to_string(t);
        out += ',';
        out += format_number(stats.mean[t]);
        out += ',';
        out += format_number(stats.standard_error[t]);
        out += '\n';
    }
    return out;
}

std::string boundary_csv(int m, int samples) {
    if (samples < 2) {
        throw ArgumentError("boundary needs at least 2 samples, got " + std::to_string(samples));
    }
    std::string out(kBoundaryHeader);
    out += '\n';
    for (int i = 0; i < samples; ++i) {
        const double p3 = i == samples - 1 ? 1.0 : static_cast<double>(i) / (samples - 1);
        out += format_number(p3);
        out += ',';
        out += format_number(analysis::boundary_p2(Probability(p3), m).value());
        out += '\n';
    }
    return out;
}

std::string line_chart_svg(std::string_view title, const std::vector<Series>& series) {
    constexpr double width = 640;
    constexpr double height = 400;
    constexpr double margin = 48;
    constexpr const char* palette[] = {"#1f77b4", "#d62790", "#000000", "#2ca02c", "#ff7f0e", "#9467bd"};

    std::size_t points = 0;
    double lo = 0.0;
    double hi = 0.0;
    for (const auto& s : series) {
        points = std::max(points, s.y.size());
        for (double v : s.y) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (hi == lo) {
        hi = lo + 1.0;
    }
    const double x_span = points > 1 ? static_cast<double>(points - 1) : 1.0;
    const auto px = [&](std::size_t i) { return margin + (width - 2 * margin) * static_cast<double>(i) / x_span; };
    const auto py = [&](double v) { return height - margin - (height - 2 * margin) * (v - lo) / (hi - lo); };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\">\n";
    svg += "<text x=\"" + format_number(margin) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">";
    svg += std::string(title) + "</text>\n";
    svg += "<line x1=\"" + format_number(margin) + "\" y1=\"" + format_number(height - margin) + "\" x2=\"" +
           format_number(width - margin) + "\" y2=\"" + format_number(height - margin) + "\" stroke=\"#888\"/>\n";
    svg += "<line x1=\"" + format_number(margin) + "\" y1=\"" + format_number(margin) + "\" x2=\"" +
           format_number(margin) + "\" y2=\"" + format_number(height - margin) + "\" stroke=\"#888\"/>\n";
    if (lo < 0.0 && hi > 0.0) {
        svg += "<line x1=\"" + format_number(margin) + "\" y1=\"" + format_number(py(0.0)) + "\" x2=\"" +
               format_number(width - margin) + "\" y2=\"" + format_number(py(0.0)) +
               "\" stroke=\"#ccc\" stroke-dasharray=\"4\"/>\n";
    }
    svg += "<text x=\"4\" y=\"" + format_number(margin) + "\" font-size=\"10\">" + format_number(hi) + "</text>\n";
    svg += "<text x=\"4\" y=\"" + format_number(height - margin) + "\" font-size=\"10\">" + format_number(lo) +
           "</text>\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(palette[k % std::size(palette)]) + "\" points=\"";
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            svg += format_number(px(i)) + "," + format_number(py(s.y[i])) + (i + 1 < s.y.size() ? " " : "");
        }
        svg += "\"><title>" + s.name + "</title></polyline>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.close();
    if (!f) {
        throw IoError("failed writing " + path.string());
    }
}

} // namespace parrondo::io
