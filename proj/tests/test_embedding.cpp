#include "numaxis/embedding.hpp"
#include "numaxis/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace numaxis;

namespace {

constexpr Region kRegions[] = {Region::I, Region::II, Region::III};

// Interior sampling ranges kept clear of the singular ends, where the
// finite-difference truncation error alone exceeds the residual bound.
std::uniform_real_distribution<double> interior(Region region) {
    switch (region) {
        case Region::I:
            return std::uniform_real_distribution<double>(-10.0, -1.05);
        case Region::II:
            return std::uniform_real_distribution<double>(-0.95, 10.0);
        case Region::III:
            return std::uniform_real_distribution<double>(-0.95, -0.05);
    }
    return {};
}

}  // namespace

TEST_CASE("region structure") {
    CHECK(signature_of(Region::I) == PlaneSignature::PseudoXminusY);
    CHECK(signature_of(Region::II) == PlaneSignature::PseudoYminusX);
    CHECK(signature_of(Region::III) == PlaneSignature::Euclidean);
    CHECK(interval_of(Region::I).hi == -1.0);
    CHECK(interval_of(Region::II).lo == -1.0);
    CHECK(interval_of(Region::III).lo == -1.0);
    CHECK(interval_of(Region::III).hi == 0.0);
    CHECK(parse_region("II") == Region::II);
    CHECK_THROWS_AS(parse_region("IV"), ArgumentError);
}

TEST_CASE("rhs_squared examples") {
    CHECK(rhs_squared(-0.5, Region::III) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rhs_squared(0.0, Region::II) == 2.0);
    CHECK(rhs_squared(-2.0, Region::I) == 2.0);
    CHECK_THROWS_AS(rhs_squared(0.5, Region::III), SignatureError);
}

TEST_CASE("rhs_squared region errors") {
    CHECK_THROWS_AS(rhs_squared(-1.0, Region::II), RegionError);
    CHECK_THROWS_AS(rhs_squared(2.0, Region::I), RegionError);
    CHECK_THROWS_AS(rhs_squared(-3.0, Region::II), RegionError);
    CHECK_THROWS_AS(rhs_squared(-0.5, Region::I), SignatureError);
}

TEST_CASE("Euclidean plane cannot embed z > 0") {
    std::mt19937_64 rng(17);
    std::exponential_distribution<double> positive(0.1);
    for (int i = 0; i < 500; ++i) {
        const double z = positive(rng) + 1e-12;
        CHECK_THROWS_AS(rhs_squared(z, Region::III), SignatureError);
    }
}

TEST_CASE("closed-form values with quadrature oracles") {
    CHECK(std::abs(closed_form_y(-1e-14, Region::III, Branch::Plus, 1.0)) < 1e-12);

    const double ii_oracle =
        oracle::tanh_sinh([](double u) { return std::sqrt((1.0 + u) / u); }, 0.0, 1.0);  // u = 1 + z
    CHECK(std::abs(ii_oracle - (std::asinh(1.0) + std::sqrt(2.0))) < 1e-10);
    CHECK(std::abs(closed_form_y(0.0, Region::II, Branch::Plus, 1.0) - ii_oracle) < 1e-10);
    CHECK(closed_form_y(0.0, Region::II, Branch::Plus, 1.0) == doctest::Approx(2.295587).epsilon(1e-6));

    const double i_oracle = oracle::tanh_sinh([](double t) { return std::sqrt((1.0 + t) / t); }, 0.0, 1.0);  // t = -(1 + z)
    CHECK(std::abs(i_oracle - (std::acosh(std::sqrt(2.0)) + std::sqrt(2.0))) < 1e-10);
    CHECK(std::abs(closed_form_y(-2.0, Region::I, Branch::Plus, 1.0) - i_oracle) < 1e-10);

    const double iii_oracle = oracle::tanh_sinh([](double u) { return std::sqrt((1.0 - u) / u); }, 0.0, 1.0);  // u = 1 + z
    CHECK(std::abs(iii_oracle - std::numbers::pi / 2.0) < 1e-10);
    CHECK(std::abs(closed_form_y(-1.0 + 1e-15, Region::III, Branch::Plus, 1.0) - std::numbers::pi / 2.0) < 1e-7);
}

TEST_CASE("closed form follows the written inverse-function formulas") {
    for (double z : {-1.5, -3.0, -7.25}) {
        const double written = std::log(std::sqrt(-z) + std::sqrt(-z - 1.0)) + std::sqrt((1.0 + z) * z);
        CHECK(closed_form_y(z, Region::I, Branch::Plus, 1.0) == doctest::Approx(written).epsilon(1e-13));
    }
    for (double z : {-0.9, -0.3, 0.0, 4.0}) {
        const double written =
            std::log(std::sqrt(1.0 + z) + std::sqrt(2.0 + z)) + std::sqrt((1.0 + z) * (2.0 + z));
        CHECK(closed_form_y(z, Region::II, Branch::Plus, 1.0) == doctest::Approx(written).epsilon(1e-13));
    }
    for (double z : {-0.9, -0.5, -0.1}) {
        const double written = std::asin(std::sqrt(-z)) - std::sqrt(-z * (1.0 + z));
        CHECK(closed_form_y(z, Region::III, Branch::Plus, 1.0) == doctest::Approx(written).epsilon(1e-13));
    }
}

TEST_CASE("closed form region errors") {
    CHECK_THROWS_AS(closed_form_y(0.5, Region::III, Branch::Plus, 1.0), RegionError);
    CHECK_THROWS_AS(closed_form_y(-1.0, Region::II, Branch::Plus, 1.0), RegionError);
    CHECK_THROWS_AS(closed_form_y(-0.5, Region::I, Branch::Plus, 1.0), RegionError);
    CHECK_THROWS_AS(closed_form_y(-0.5, Region::II, Branch::Plus, 0.0), ArgumentError);
}

TEST_CASE("derivative residual of the closed forms") {
    std::mt19937_64 rng(1234);
    const double h = 1e-6;
    for (double xc : {1.0, 2.5}) {
        for (Region region : kRegions) {
            auto dist = interior(region);
            double worst = 0.0;
            for (int i = 0; i < 1000; ++i) {
                const double z = dist(rng);
                const double dy_dz = (closed_form_y(z + h, region, Branch::Plus, xc) -
                                      closed_form_y(z - h, region, Branch::Plus, xc)) /
                                     (2.0 * h);
                const double dy_dx = dy_dz / xc;
                worst = std::max(worst, std::abs(dy_dx * dy_dx - rhs_squared(z, region)));
            }
            INFO("region " << to_string(region) << " xc=" << xc);
            CHECK(worst < 1e-8);
        }
    }
}

TEST_CASE("numerical embedding matches the closed forms") {
    struct Span {
        Region region;
        double from;
        double to;
        int n;
    };
    for (const Span& s : {Span{Region::III, -0.999, -0.001, 100}, Span{Region::II, -0.999, 5.0, 200},
                          Span{Region::I, -10.0, -1.001, 200}, Span{Region::II, -0.999999, -0.5, 50}}) {
        for (double xc : {1.0, 0.3}) {
            const EmbeddingCurve curve = integrate_embedding(s.region, s.from, s.to, s.n, xc);
            REQUIRE(curve.samples.size() == static_cast<std::size_t>(s.n));
            CHECK(curve.branch == Branch::Plus);
            CHECK(curve.samples.front().x == doctest::Approx(s.from * xc));
            CHECK(curve.samples.back().x == doctest::Approx(s.to * xc));
            double worst = 0.0;
            for (const CurvePoint& pt : curve.samples) {
                worst = std::max(worst, std::abs(pt.y - closed_form_y(pt.x / xc, s.region, Branch::Plus, xc)));
                CHECK(pt.y >= 0.0);
            }
            INFO("region " << to_string(s.region) << " xc=" << xc);
            CHECK(worst < 1e-6);
        }
    }
}

TEST_CASE("integrate_embedding rejects spans outside the region") {
    CHECK_THROWS_AS(integrate_embedding(Region::III, -0.5, 0.5, 10, 1.0), RegionError);
    CHECK_THROWS_AS(integrate_embedding(Region::I, -1.0, -2.0, 10, 1.0), RegionError);
    CHECK_THROWS_AS(integrate_embedding(Region::II, -0.5, 1.0, 0, 1.0), ArgumentError);
}

TEST_CASE("admissible regions") {
    CHECK(admissible_regions(-2.0) == std::vector<Region>{Region::I});
    CHECK(admissible_regions(-0.5) == std::vector<Region>{Region::II, Region::III});
    CHECK(admissible_regions(1.0) == std::vector<Region>{Region::II});
    CHECK_THROWS_AS(admissible_regions(-1.0), BoundaryError);
    CHECK_THROWS_AS(admissible_regions(0.0), BoundaryError);
}

TEST_CASE("horizon continuity of regions I and II") {
    double prev_i = INFINITY;
    double prev_ii = INFINITY;
    for (int k = 2; k <= 6; ++k) {
        const double d = std::pow(10.0, -k);
        const double y_i = closed_form_y(-1.0 - d, Region::I, Branch::Plus, 1.0);
        const double y_ii = closed_form_y(-1.0 + d, Region::II, Branch::Plus, 1.0);
        CHECK(y_i < prev_i);
        CHECK(y_ii < prev_ii);
        CHECK(y_i > 0.0);
        CHECK(y_ii > 0.0);
        prev_i = y_i;
        prev_ii = y_ii;
    }
    CHECK(prev_i < 3e-3);
    CHECK(prev_ii < 3e-3);
}

TEST_CASE("closed form scales exactly with x_c and mirrors exactly across branches") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    for (Region region : kRegions) {
        auto dist = interior(region);
        for (int i = 0; i < 200; ++i) {
            const double z = dist(rng);
            const double xc = scale(rng);
            for (Branch b : {Branch::Plus, Branch::Minus}) {
                CHECK(closed_form_y(z, region, b, xc) == xc * closed_form_y(z, region, b, 1.0));
            }
            CHECK(closed_form_y(z, region, Branch::Minus, xc) == -closed_form_y(z, region, Branch::Plus, xc));
        }
    }
}

TEST_CASE("figure curves") {
    const auto curves = figure1_curves(1.0, 0.01, 200);
    REQUIRE(curves.size() == 6);
    for (std::size_t i = 0; i < curves.size(); i += 2) {
        const EmbeddingCurve& plus = curves[i];
        const EmbeddingCurve& minus = curves[i + 1];
        CHECK(plus.branch == Branch::Plus);
        CHECK(minus.branch == Branch::Minus);
        CHECK(plus.region == minus.region);
        REQUIRE(plus.samples.size() == minus.samples.size());
        const RegionInterval iv = interval_of(plus.region);
        for (std::size_t k = 0; k < plus.samples.size(); ++k) {
            CHECK(minus.samples[k].x == plus.samples[k].x);
            CHECK(minus.samples[k].y == -plus.samples[k].y);
            CHECK(plus.samples[k].x > iv.lo);
            CHECK(plus.samples[k].x < iv.hi);
            CHECK(plus.samples[k].y >= 0.0);
        }
        if (plus.region == Region::III) {
            for (const CurvePoint& pt : plus.samples) {
                CHECK(pt.y > 0.0);
                CHECK(pt.y < std::numbers::pi / 2.0);
            }
        }
    }
    CHECK(curves[0].samples.front().x == -5.0);
    CHECK(curves[2].samples.back().x == 5.0);
    CHECK(curves[4].samples.front().x == doctest::Approx(-0.99));
    CHECK(curves[4].samples.back().x == doctest::Approx(-0.01));

    CHECK_THROWS_AS(figure1_curves(1.0, 0.0, 10), ArgumentError);
    CHECK_THROWS_AS(figure1_curves(1.0, 0.1, 10), ArgumentError);
    CHECK_THROWS_AS(figure1_curves(-1.0, 0.01, 10), ArgumentError);
}
