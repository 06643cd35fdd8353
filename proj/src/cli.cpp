#include "numaxis/cli.hpp"

#include "numaxis/curve_io.hpp"
#include "numaxis/embedding.hpp"
#include "numaxis/errors.hpp"
#include "numaxis/geodesic.hpp"
#include "numaxis/metric.hpp"
#include "numaxis/series.hpp"
#include "numaxis/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace numaxis::cli {

namespace {

using Json = nlohmann::ordered_json;

// JSON numbers carry the same 12 significant digits as the files.
Json number(double value) {
    if (!std::isfinite(value)) {
        return nullptr;
    }
    return std::stod(format_decimal(value));
}

Json exact_number(const Rational& value) {
    if (boost::multiprecision::denominator(value) == 1) {
        const BigInt num = boost::multiprecision::numerator(value);
        if (num >= std::numeric_limits<std::int64_t>::min() && num <= std::numeric_limits<std::int64_t>::max()) {
            return num.convert_to<std::int64_t>();
        }
    }
    return number(to_double(value));
}

std::string extension_of(const std::string& path) {
    std::string ext = std::filesystem::path(path).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return ext;
}

std::string require_output_kind(const std::string& path, std::initializer_list<const char*> allowed) {
    const std::string ext = extension_of(path);
    for (const char* candidate : allowed) {
        if (ext == candidate) {
            return ext;
        }
    }
    throw ArgumentError("unsupported output '" + path + "': expected a .csv or .svg path");
}

SeriesSpec parse_series(const std::string& text) {
    if (text == "ones") {
        return SeriesSpec::ones();
    }
    if (text == "naturals") {
        return SeriesSpec::naturals();
    }
    if (text == "grandi") {
        return SeriesSpec::grandi();
    }
    auto suffix = [&](const std::string& prefix) -> std::optional<std::string> {
        if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
            return text.substr(prefix.size());
        }
        return std::nullopt;
    };
    try {
        if (auto r = suffix("geometric:")) {
            std::size_t used = 0;
            const double ratio = std::stod(*r, &used);
            if (used == r->size()) {
                return SeriesSpec::geometric(ratio);
            }
        }
        if (auto k = suffix("power:")) {
            std::size_t used = 0;
            const long power = std::stol(*k, &used);
            if (used == k->size() && power >= 0) {
                return SeriesSpec::power_of_n(static_cast<unsigned>(power));
            }
        }
    } catch (const std::logic_error&) {
        // fall through to the error below
    }
    throw ArgumentError("unknown series '" + text + "' (expected ones|naturals|grandi|geometric:<r>|power:<k>)");
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            grid.push_back(std::stod(item));
        } catch (const std::logic_error&) {
            throw ArgumentError("bad Abel grid entry '" + item + "'");
        }
    }
    return grid;
}

Json summation_json(const SummationResult& result) {
    Json j;
    j["value"] = result.value ? number(*result.value) : Json(nullptr);
    j["assigned"] = result.assigned();
    j["method"] = to_string(result.method);
    j["diagnostics"] = result.diagnostics;
    return j;
}

struct Options {
    // zeta
    double s_re = 0.0;
    double s_im = 0.0;
    int terms = kDefaultZetaTerms;
    int order = kDefaultZetaOrder;
    std::string zeta_method = "em";
    // sum
    std::string series;
    std::string sum_method;
    std::uint64_t n_max = 100000;
    double tol = 1e-6;
    std::string grid = "0.9,0.99,0.999,0.9999,0.99999";
    // metric / geodesic / embedding
    double xc = 1.0;
    double c = 1.0;
    double dt = 0.0;
    double dx = 0.0;
    double x = 0.0;
    double from = 0.0;
    double to = 0.0;
    double x0 = 0.0;
    double ux0 = 0.0;
    double tau_max = 0.0;
    double dtau = 0.0;
    std::string region = "II";
    int samples = 200;
    double margin = 0.01;
    std::string out;
};

void run_zeta(const Options& o, std::ostream& out) {
    const ZetaArgument s{o.s_re, o.s_im};
    const ZetaResult r = o.zeta_method == "reflect" ? zeta_reflected(s) : zeta_continued(s, o.terms, o.order);
    Json j;
    j["value"] = number(r.value.real());
    if (o.s_im != 0.0) {
        j["imag"] = number(r.value.imag());
    }
    j["method"] = o.zeta_method;
    j["est_error"] = number(r.est_error);
    out << j.dump() << '\n';
}

void run_sum(const Options& o, std::ostream& out) {
    const SeriesSpec spec = parse_series(o.series);
    const std::string& m = o.sum_method;
    if (m.rfind("partial:", 0) == 0) {
        std::uint64_t n = 0;
        try {
            std::size_t used = 0;
            const std::string digits = m.substr(8);
            n = std::stoull(digits, &used);
            if (used != digits.size() || digits.front() == '-') {
                throw std::invalid_argument(digits);
            }
        } catch (const std::logic_error&) {
            throw ArgumentError("bad partial-sum length in '" + m + "'");
        }
        const Rational value = partial_sum(spec, n);
        Json j;
        j["value"] = exact_number(value);
        j["exact"] = to_string(value);
        j["assigned"] = true;
        j["method"] = to_string(SummationMethod::PartialSumLimit);
        out << j.dump() << '\n';
        return;
    }
    if (m == "cesaro") {
        out << summation_json(cesaro_sum(spec, o.n_max, o.tol)).dump() << '\n';
        return;
    }
    if (m == "abel") {
        const auto grid = parse_grid(o.grid);
        out << summation_json(abel_sum(spec, grid)).dump() << '\n';
        return;
    }
    if (m == "zeta-reg") {
        const bool powers = spec.kind() == SeriesKind::Ones || spec.kind() == SeriesKind::Naturals ||
                            spec.kind() == SeriesKind::PowerOfN;
        if (!powers) {
            throw ArgumentError("zeta regularization applies to ones, naturals and power:<k> only");
        }
        out << summation_json(zeta_regularized_sum(spec.power())).dump() << '\n';
        return;
    }
    throw ArgumentError("unknown summation method '" + m + "' (expected partial:<n>|cesaro|abel|zeta-reg)");
}

void run_geodesic(const Options& o, std::ostream& out) {
    const std::string kind = require_output_kind(o.out, {".csv", ".svg"});
    const MetricParams p(o.xc, o.c);
    const Trajectory traj = integrate(init_state(o.x0, o.ux0, p), o.tau_max, o.dtau, p);
    if (kind == ".csv") {
        write_trajectory_csv(o.out, traj);
    } else {
        emit_svg(std::span<const Trajectory>(&traj, 1), o.out);
    }
    const GeodesicState& last = traj.samples.back();
    Json j;
    j["termination"] = to_string(traj.termination);
    j["samples"] = traj.samples.size();
    j["tau"] = number(last.tau);
    j["t"] = number(last.t);
    j["x"] = number(last.x);
    j["eps"] = number(last.eps);
    j["out"] = o.out;
    out << j.dump() << '\n';
}

void run_embed(const Options& o, std::ostream& out) {
    const std::string kind = require_output_kind(o.out, {".csv", ".svg"});
    const Region region = parse_region(o.region);
    const EmbeddingCurve curve = integrate_embedding(region, o.from, o.to, o.samples, o.xc);
    double deviation = 0.0;
    for (const CurvePoint& pt : curve.samples) {
        deviation = std::max(deviation, std::abs(pt.y - closed_form_y(pt.x / o.xc, region, Branch::Plus, o.xc)));
    }
    const std::span<const EmbeddingCurve> curves(&curve, 1);
    if (kind == ".csv") {
        write_curve_csv(o.out, curves);
    } else {
        emit_svg(curves, o.out);
    }
    Json j;
    j["region"] = to_string(region);
    j["signature"] = to_string(signature_of(region));
    j["samples"] = curve.samples.size();
    j["max_deviation"] = number(deviation);
    j["out"] = o.out;
    out << j.dump() << '\n';
}

void run_figure1(const Options& o, std::ostream& out) {
    const std::string kind = require_output_kind(o.out, {".csv", ".svg"});
    const auto curves = figure1_curves(o.xc, o.margin, o.samples);
    if (kind == ".csv") {
        write_curve_csv(o.out, curves);
    } else {
        emit_svg(curves, o.out);
    }
    Json j;
    j["branches"] = curves.size();
    j["out"] = o.out;
    out << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Zeta-regularized sums, the numeric-axis metric, its geodesics and plane embeddings", "numaxis"};
    app.require_subcommand(1, 1);
    Options o;

    auto* zeta = app.add_subcommand("zeta", "Riemann zeta by Euler-Maclaurin or the reflection formula");
    zeta->add_option("--s", o.s_re, "Real part of s")->required();
    zeta->add_option("--im", o.s_im, "Imaginary part of s");
    zeta->add_option("--n", o.terms, "Euler-Maclaurin terms N")->capture_default_str();
    zeta->add_option("--m", o.order, "Euler-Maclaurin order M")->capture_default_str();
    zeta->add_option("--method", o.zeta_method, "em or reflect")
        ->check(CLI::IsMember({"em", "reflect"}))
        ->capture_default_str();

    auto* sum = app.add_subcommand("sum", "Partial sums and summation of the built-in series");
    sum->add_option("--series", o.series, "ones|naturals|grandi|geometric:<r>|power:<k>")->required();
    sum->add_option("--method", o.sum_method, "partial:<n>|cesaro|abel|zeta-reg")->required();
    sum->add_option("--n-max", o.n_max, "Cesaro: number of partial sums")->capture_default_str();
    sum->add_option("--tol", o.tol, "Cesaro: stabilization tolerance")->capture_default_str();
    sum->add_option("--grid", o.grid, "Abel: ascending comma-separated points in (0,1)")->capture_default_str();

    auto* metric = app.add_subcommand("metric", "Intervals, horizon side and proper length");
    metric->require_subcommand(1, 1);
    metric->add_option("--xc", o.xc, "Characteristic length x_c")->capture_default_str();
    metric->add_option("--c", o.c, "Speed constant c")->capture_default_str();
    auto* interval = metric->add_subcommand("interval", "Squared interval ds^2 at x");
    interval->add_option("--dt", o.dt)->required();
    interval->add_option("--dx", o.dx)->required();
    interval->add_option("--x", o.x)->required();
    auto* length = metric->add_subcommand("length", "Proper length between exterior points");
    length->add_option("--from", o.from)->required();
    length->add_option("--to", o.to)->required();
    auto* side = metric->add_subcommand("classify", "Exterior, horizon or interior");
    side->add_option("--x", o.x)->required();

    auto* geodesic = app.add_subcommand("geodesic", "Integrate a radial timelike geodesic");
    geodesic->add_option("--x0", o.x0, "Initial position")->required();
    geodesic->add_option("--ux0", o.ux0, "Initial dx/dtau")->required();
    geodesic->add_option("--tau-max", o.tau_max, "Proper-time span")->required();
    geodesic->add_option("--dtau", o.dtau, "Proper-time step")->required();
    geodesic->add_option("--xc", o.xc)->capture_default_str();
    geodesic->add_option("--c", o.c)->capture_default_str();
    geodesic->add_option("--out", o.out, ".csv or .svg output path")->required();

    auto* embed = app.add_subcommand("embed", "Numerically integrate one embedding region");
    embed->add_option("--region", o.region, "I, II or III")
        ->check(CLI::IsMember({"I", "II", "III"}))
        ->capture_default_str();
    embed->add_option("--from", o.from, "Start z = x/x_c")->required();
    embed->add_option("--to", o.to, "End z = x/x_c")->required();
    embed->add_option("--samples", o.samples)->capture_default_str();
    embed->add_option("--xc", o.xc)->capture_default_str();
    embed->add_option("--out", o.out, ".csv or .svg output path")->required();

    auto* figure = app.add_subcommand("figure1", "All six embedding branches");
    figure->add_option("--xc", o.xc)->capture_default_str();
    figure->add_option("--margin", o.margin, "Distance kept from finite region ends, in units of x_c")
        ->capture_default_str();
    figure->add_option("--samples", o.samples)->capture_default_str();
    figure->add_option("--out", o.out, ".csv or .svg output path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (zeta->parsed()) {
            run_zeta(o, out);
        } else if (sum->parsed()) {
            run_sum(o, out);
        } else if (metric->parsed()) {
            const MetricParams p(o.xc, o.c);
            Json j;
            if (interval->parsed()) {
                const Interval iv = interval_squared(o.dt, o.dx, o.x, p);
                j["ds2"] = number(iv.ds2);
                j["classification"] = to_string(iv.kind);
            } else if (length->parsed()) {
                const ProperLength len = proper_length(o.from, o.to, p);
                j["length"] = number(len.closed_form);
                j["quadrature"] = number(len.quadrature);
            } else {
                j["side"] = to_string(classify(o.x, p));
                j["f"] = number(conformal_factor(o.x, p));
            }
            out << j.dump() << '\n';
        } else if (geodesic->parsed()) {
            run_geodesic(o, out);
        } else if (embed->parsed()) {
            run_embed(o, out);
        } else if (figure->parsed()) {
            run_figure1(o, out);
        }
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace numaxis::cli
