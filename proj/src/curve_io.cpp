#include "numaxis/curve_io.hpp"

#include "numaxis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace numaxis {

namespace {

constexpr char kCurveHeader[] = "x,y,region,branch";
constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kPad = 60.0;

struct PlotSeries {
    std::string label;
    std::string dash;  // empty for solid
    std::vector<CurvePoint> points;
};

struct LegendEntry {
    std::string label;
    std::string dash;
};

std::string dash_for(Region region) {
    switch (region) {
        case Region::I:
            return "";
        case Region::II:
            return "10,4,2,4";
        case Region::III:
            return "8,5";
    }
    return "";
}

std::string style_name(Region region) {
    switch (region) {
        case Region::I:
            return "solid";
        case Region::II:
            return "dash-dotted";
        case Region::III:
            return "dashed";
    }
    return "";
}

std::ofstream open_for_writing(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

std::string render(const std::vector<PlotSeries>& series, const std::vector<LegendEntry>& legend,
                   const std::string& x_label, const std::string& y_label) {
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_min = x_min;
    double y_max = -x_min;
    for (const PlotSeries& s : series) {
        for (const CurvePoint& p : s.points) {
            x_min = std::min(x_min, p.x);
            x_max = std::max(x_max, p.x);
            y_min = std::min(y_min, p.y);
            y_max = std::max(y_max, p.y);
        }
    }
    if (!(x_max > x_min)) {
        x_min -= 1.0;
        x_max += 1.0;
    }
    if (!(y_max > y_min)) {
        y_min -= 1.0;
        y_max += 1.0;
    }
    auto px = [&](double x) { return kPad + (x - x_min) / (x_max - x_min) * (kWidth - 2 * kPad); };
    auto py = [&](double y) { return kHeight - kPad - (y - y_min) / (y_max - y_min) * (kHeight - 2 * kPad); };

    std::ostringstream svg;
    svg.precision(6);
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes through the origin when it is in view, otherwise along the frame.
    const double axis_y = py(std::clamp(0.0, y_min, y_max));
    const double axis_x = px(std::clamp(0.0, x_min, x_max));
    svg << "<g id=\"axes\" stroke=\"#888\" stroke-width=\"1\">\n"
        << "<line x1=\"" << kPad << "\" y1=\"" << axis_y << "\" x2=\"" << kWidth - kPad << "\" y2=\"" << axis_y
        << "\"/>\n"
        << "<line x1=\"" << axis_x << "\" y1=\"" << kPad << "\" x2=\"" << axis_x << "\" y2=\"" << kHeight - kPad
        << "\"/>\n"
        << "</g>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#444\">\n"
        << "<text x=\"" << kWidth - kPad + 8 << "\" y=\"" << axis_y + 4 << "\">" << x_label << "</text>\n"
        << "<text x=\"" << axis_x - 4 << "\" y=\"" << kPad - 10 << "\">" << y_label << "</text>\n"
        << "<text x=\"" << kPad << "\" y=\"" << kHeight - kPad + 20 << "\">" << format_decimal(x_min) << "</text>\n"
        << "<text x=\"" << kWidth - kPad << "\" y=\"" << kHeight - kPad + 20 << "\" text-anchor=\"end\">"
        << format_decimal(x_max) << "</text>\n"
        << "<text x=\"" << kPad - 6 << "\" y=\"" << kHeight - kPad << "\" text-anchor=\"end\">"
        << format_decimal(y_min) << "</text>\n"
        << "<text x=\"" << kPad - 6 << "\" y=\"" << kPad + 4 << "\" text-anchor=\"end\">" << format_decimal(y_max)
        << "</text>\n"
        << "</g>\n";

    for (const PlotSeries& s : series) {
        svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"";
        if (!s.dash.empty()) {
            svg << " stroke-dasharray=\"" << s.dash << "\"";
        }
        svg << " points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            svg << (i ? " " : "") << px(s.points[i].x) << ',' << py(s.points[i].y);
        }
        svg << "\"/>\n";
        if (!s.points.empty()) {
            const CurvePoint& mid = s.points[s.points.size() / 2];
            svg << "<text x=\"" << px(mid.x) + 4 << "\" y=\"" << py(mid.y) - 4
                << "\" font-family=\"serif\" font-size=\"14\">" << s.label << "</text>\n";
        }
    }

    const double legend_x = kWidth - kPad - 170;
    double legend_y = kPad + 10;
    svg << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"13\">\n"
        << "<rect x=\"" << legend_x - 10 << "\" y=\"" << legend_y - 16 << "\" width=\"180\" height=\""
        << 22 * legend.size() + 12 << "\" fill=\"white\" stroke=\"#ccc\"/>\n";
    for (const LegendEntry& entry : legend) {
        svg << "<line x1=\"" << legend_x << "\" y1=\"" << legend_y - 4 << "\" x2=\"" << legend_x + 40 << "\" y2=\""
            << legend_y - 4 << "\" stroke=\"black\" stroke-width=\"1.5\"";
        if (!entry.dash.empty()) {
            svg << " stroke-dasharray=\"" << entry.dash << "\"";
        }
        svg << "/>\n<text x=\"" << legend_x + 50 << "\" y=\"" << legend_y << "\">" << entry.label << "</text>\n";
        legend_y += 22;
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) {
        fields.push_back(field);
    }
    return fields;
}

}  // namespace

std::string format_decimal(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

void write_curve_csv(std::ostream& out, std::span<const EmbeddingCurve> curves) {
    out << kCurveHeader << '\n';
    for (const EmbeddingCurve& curve : curves) {
        const char* branch = curve.branch == Branch::Plus ? "+" : "-";
        const std::string region = to_string(curve.region);
        for (const CurvePoint& p : curve.samples) {
            out << format_decimal(p.x) << ',' << format_decimal(p.y) << ',' << region << ',' << branch << '\n';
        }
    }
}

void write_curve_csv(const std::filesystem::path& path, std::span<const EmbeddingCurve> curves) {
    std::ofstream out = open_for_writing(path);
    write_curve_csv(out, curves);
    finish(out, path);
}

std::vector<EmbeddingCurve> read_curve_csv(std::istream& in, double xc) {
    std::string line;
    if (!std::getline(in, line) || line != kCurveHeader) {
        throw ArgumentError("curve file must start with the header '" + std::string(kCurveHeader) + "'");
    }
    std::vector<EmbeddingCurve> curves;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty()) {
            continue;
        }
        const auto fields = split_csv_row(line);
        if (fields.size() != 4 || (fields[3] != "+" && fields[3] != "-")) {
            throw ArgumentError("malformed curve row " + std::to_string(row) + ": '" + line + "'");
        }
        CurvePoint point{};
        try {
            point = {std::stod(fields[0]), std::stod(fields[1])};
        } catch (const std::exception&) {
            throw ArgumentError("non-numeric value in curve row " + std::to_string(row));
        }
        const Region region = parse_region(fields[2]);
        const Branch branch = fields[3] == "+" ? Branch::Plus : Branch::Minus;
        if (curves.empty() || curves.back().region != region || curves.back().branch != branch) {
            curves.push_back({region, branch, {}, xc});
        }
        curves.back().samples.push_back(point);
    }
    return curves;
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& trajectory) {
    std::ofstream out = open_for_writing(path);
    out << "tau,t,x,ux,eps\n";
    for (const GeodesicState& s : trajectory.samples) {
        out << format_decimal(s.tau) << ',' << format_decimal(s.t) << ',' << format_decimal(s.x) << ','
            << format_decimal(s.ux) << ',' << format_decimal(s.eps) << '\n';
    }
    finish(out, path);
}

std::string render_svg(std::span<const EmbeddingCurve> curves) {
    if (curves.empty()) {
        throw ArgumentError("nothing to plot: empty curve list");
    }
    std::vector<PlotSeries> series;
    std::vector<LegendEntry> legend;
    for (const EmbeddingCurve& curve : curves) {
        series.push_back({to_string(curve.region), dash_for(curve.region), curve.samples});
        const std::string label = to_string(curve.region) + " (" + style_name(curve.region) + ")";
        const bool listed = std::any_of(legend.begin(), legend.end(),
                                        [&](const LegendEntry& e) { return e.label == label; });
        if (!listed) {
            legend.push_back({label, dash_for(curve.region)});
        }
    }
    return render(series, legend, "x", "y");
}

std::string render_svg(std::span<const Trajectory> trajectories) {
    if (trajectories.empty()) {
        throw ArgumentError("nothing to plot: empty trajectory list");
    }
    std::vector<PlotSeries> series;
    std::vector<LegendEntry> legend;
    for (std::size_t i = 0; i < trajectories.size(); ++i) {
        PlotSeries s{"", "", {}};
        for (const GeodesicState& state : trajectories[i].samples) {
            s.points.push_back({state.x, state.t});
        }
        s.label = std::to_string(i + 1);
        series.push_back(std::move(s));
        legend.push_back({"worldline " + std::to_string(i + 1) + " (" + to_string(trajectories[i].termination) + ")",
                          ""});
    }
    return render(series, legend, "x", "t");
}

void emit_svg(std::span<const EmbeddingCurve> curves, const std::filesystem::path& path) {
    const std::string svg = render_svg(curves);
    std::ofstream out = open_for_writing(path);
    out << svg;
    finish(out, path);
}

void emit_svg(std::span<const Trajectory> trajectories, const std::filesystem::path& path) {
    const std::string svg = render_svg(trajectories);
    std::ofstream out = open_for_writing(path);
    out << svg;
    finish(out, path);
}

}  // namespace numaxis
