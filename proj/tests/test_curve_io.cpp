#include "numaxis/curve_io.hpp"
#include "numaxis/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

using namespace numaxis;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("decimal format keeps 12 significant digits") {
    CHECK(format_decimal(-1.0 / 12.0) == "-0.0833333333333");
    CHECK(format_decimal(10.0) == "10");
    CHECK(format_decimal(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("curve CSV round trip") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> value(-50.0, 50.0);
    std::vector<EmbeddingCurve> curves;
    for (Region region : {Region::I, Region::II, Region::III}) {
        for (Branch branch : {Branch::Plus, Branch::Minus}) {
            EmbeddingCurve c{region, branch, {}, 1.0};
            for (int i = 0; i < 50; ++i) {
                c.samples.push_back({value(rng), value(rng)});
            }
            curves.push_back(std::move(c));
        }
    }
    std::stringstream buffer;
    write_curve_csv(buffer, curves);
    const auto back = read_curve_csv(buffer);
    REQUIRE(back.size() == curves.size());
    for (std::size_t i = 0; i < curves.size(); ++i) {
        CHECK(back[i].region == curves[i].region);
        CHECK(back[i].branch == curves[i].branch);
        REQUIRE(back[i].samples.size() == curves[i].samples.size());
        for (std::size_t k = 0; k < curves[i].samples.size(); ++k) {
            CHECK(std::abs(back[i].samples[k].x - curves[i].samples[k].x) < 1e-10);
            CHECK(std::abs(back[i].samples[k].y - curves[i].samples[k].y) < 1e-10);
        }
    }
}

TEST_CASE("curve CSV rejects malformed input") {
    std::stringstream no_header("1,2,I,+\n");
    CHECK_THROWS_AS(read_curve_csv(no_header), ArgumentError);
    std::stringstream bad_branch("x,y,region,branch\n1,2,I,*\n");
    CHECK_THROWS_AS(read_curve_csv(bad_branch), ArgumentError);
    std::stringstream bad_region("x,y,region,branch\n1,2,IV,+\n");
    CHECK_THROWS_AS(read_curve_csv(bad_region), ArgumentError);
}

TEST_CASE("SVG: one polyline per curve, styles per region, legend") {
    const auto curves = figure1_curves(1.0, 0.01, 50);
    const std::string svg = render_svg(curves);
    CHECK(count(svg, "<polyline") == 6);
    CHECK(count(svg, "stroke-dasharray=\"10,4,2,4\"") == 3);  // II: two polylines + legend
    CHECK(count(svg, "stroke-dasharray=\"8,5\"") == 3);       // III
    CHECK(svg.find("id=\"legend\"") != std::string::npos);
    CHECK(svg.find("I (solid)") != std::string::npos);
    CHECK(svg.find("II (dash-dotted)") != std::string::npos);
    CHECK(svg.find("III (dashed)") != std::string::npos);
    CHECK(svg.rfind("</svg>") != std::string::npos);
}

TEST_CASE("SVG edge cases") {
    CHECK_THROWS_AS(render_svg(std::span<const EmbeddingCurve>{}), ArgumentError);
    CHECK_THROWS_AS(render_svg(std::span<const Trajectory>{}), ArgumentError);

    const EmbeddingCurve single{Region::II, Branch::Plus, {{0.0, 1.0}, {1.0, 2.0}}, 1.0};
    const std::string svg = render_svg(std::span<const EmbeddingCurve>(&single, 1));
    CHECK(count(svg, "<polyline") == 1);
    const auto start = svg.find("points=\"");
    const auto stop = svg.find('"', start + 8);
    const std::string points = svg.substr(start + 8, stop - start - 8);
    CHECK(count(points, ",") == 2);
}

TEST_CASE("writing to an unwritable path is an I/O error") {
    const auto curves = figure1_curves(1.0, 0.01, 5);
    CHECK_THROWS_AS(emit_svg(curves, "/nonexistent-dir/fig.svg"), IoError);
    CHECK_THROWS_AS(write_curve_csv(std::filesystem::path("/nonexistent-dir/fig.csv"), curves), IoError);
}
