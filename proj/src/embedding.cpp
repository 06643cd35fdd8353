#include "numaxis/embedding.hpp"

#include "numaxis/errors.hpp"
#include "numaxis/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace numaxis {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Within |1 + z| <= this band the quadrature runs in w = sqrt|1 + z|.
constexpr double kHorizonBand = 0.5;
constexpr double kQuadTol = 1e-13;
constexpr double kFigureClip = 5.0;

std::string describe(double z, Region region) {
    std::ostringstream out;
    out.precision(12);
    const RegionInterval iv = interval_of(region);
    out << "z = " << z << " is outside region " << to_string(region) << " (" << iv.lo << ", " << iv.hi << ")";
    return out.str();
}

bool inside(double z, Region region) {
    const RegionInterval iv = interval_of(region);
    return z > iv.lo && z < iv.hi;
}

void require_inside(double z, Region region) {
    if (!inside(z, region)) {
        throw RegionError(describe(z, region));
    }
}

void require_scale(double xc) {
    if (!(xc > 0.0) || !std::isfinite(xc)) {
        throw ArgumentError("x_c must be a positive finite number");
    }
}

// (dy/dx)^2 as a function of u = 1 + z, so the horizon side keeps full
// relative precision.
double slope_squared(double u, Region region) {
    switch (region) {
        case Region::I:  // 1 - (dy/dx)^2 = 1/u
            return (u - 1.0) / u;
        case Region::II:  // -1 + (dy/dx)^2 = 1/u
            return (1.0 + u) / u;
        case Region::III:  // 1 + (dy/dx)^2 = 1/u
            return (1.0 - u) / u;
    }
    return 0.0;
}

// Side of the horizon the region's anchor integral starts from: u = sigma w^2.
double horizon_side(Region region) {
    return region == Region::I ? -1.0 : 1.0;
}

double integrate_in_w(Region region, double w_lo, double w_hi) {
    const double sigma = horizon_side(region);
    auto integrand = [region, sigma](double w) {
        return 2.0 * w * std::sqrt(slope_squared(sigma * w * w, region));
    };
    return integrate_adaptive(integrand, w_lo, w_hi, kQuadTol).value;
}

double integrate_in_z(Region region, double z_lo, double z_hi) {
    auto integrand = [region](double z) { return std::sqrt(slope_squared(1.0 + z, region)); };
    return integrate_adaptive(integrand, z_lo, z_hi, kQuadTol).value;
}

// |integral| of sqrt(rhs_squared) between the anchor and z, for x_c = 1.
double anchored_integral(double z, Region region) {
    const double u = std::abs(1.0 + z);
    switch (region) {
        case Region::I:
        case Region::II: {
            const double band = std::min(u, kHorizonBand);
            double total = integrate_in_w(region, 0.0, std::sqrt(band));
            if (u > kHorizonBand) {
                const double z_band = -1.0 + horizon_side(region) * kHorizonBand;
                total += region == Region::II ? integrate_in_z(region, z_band, z) : integrate_in_z(region, z, z_band);
            }
            return total;
        }
        case Region::III: {
            // Near z = 0 the integrand behaves like sqrt(-z); v = sqrt(-z) removes it.
            auto near_origin = [](double v) { return 2.0 * v * v / std::sqrt(1.0 - v * v); };
            if (-z <= kHorizonBand) {
                return integrate_adaptive(near_origin, 0.0, std::sqrt(-z), kQuadTol).value;
            }
            return integrate_adaptive(near_origin, 0.0, std::sqrt(kHorizonBand), kQuadTol).value +
                   integrate_in_w(region, std::sqrt(u), std::sqrt(kHorizonBand));
        }
    }
    return 0.0;
}

}  // namespace

PlaneSignature signature_of(Region region) {
    switch (region) {
        case Region::I:
            return PlaneSignature::PseudoXminusY;
        case Region::II:
            return PlaneSignature::PseudoYminusX;
        case Region::III:
            return PlaneSignature::Euclidean;
    }
    return PlaneSignature::Euclidean;
}

RegionInterval interval_of(Region region) {
    switch (region) {
        case Region::I:
            return {-kInf, -1.0};
        case Region::II:
            return {-1.0, kInf};
        case Region::III:
            return {-1.0, 0.0};
    }
    return {0.0, 0.0};
}

std::string to_string(Region region) {
    switch (region) {
        case Region::I:
            return "I";
        case Region::II:
            return "II";
        case Region::III:
            return "III";
    }
    return "?";
}

std::string to_string(PlaneSignature signature) {
    switch (signature) {
        case PlaneSignature::Euclidean:
            return "dx^2 + dy^2";
        case PlaneSignature::PseudoXminusY:
            return "dx^2 - dy^2";
        case PlaneSignature::PseudoYminusX:
            return "dy^2 - dx^2";
    }
    return "?";
}

Region parse_region(const std::string& text) {
    if (text == "I") {
        return Region::I;
    }
    if (text == "II") {
        return Region::II;
    }
    if (text == "III") {
        return Region::III;
    }
    throw ArgumentError("unknown region '" + text + "' (expected I, II or III)");
}

double sign_of(Branch branch) {
    return branch == Branch::Plus ? 1.0 : -1.0;
}

double rhs_squared(double z, Region region) {
    if (!std::isfinite(z)) {
        throw ArgumentError("z must be finite");
    }
    if (z == -1.0) {
        throw RegionError(describe(z, region));
    }
    const double value = slope_squared(1.0 + z, region);
    if (value < 0.0) {
        std::ostringstream out;
        out.precision(12);
        out << "no real slope at z = " << z << ": (dy/dx)^2 = " << value << " < 0 in the "
            << to_string(signature_of(region)) << " plane";
        throw SignatureError(out.str());
    }
    require_inside(z, region);
    return value;
}

double closed_form_y(double z, Region region, Branch branch, double xc) {
    require_scale(xc);
    require_inside(z, region);
    double y = 0.0;
    switch (region) {
        case Region::I:
            // arccosh sqrt(-z) == arcsinh sqrt(-(1 + z)) for z < -1
            y = std::asinh(std::sqrt(-(1.0 + z))) + std::sqrt(z * (1.0 + z));
            break;
        case Region::II:
            y = std::asinh(std::sqrt(1.0 + z)) + std::sqrt((1.0 + z) * (2.0 + z));
            break;
        case Region::III:
            // arcsin sqrt(-z) == atan2(sqrt(-z), sqrt(1 + z)) on (-1, 0)
            y = std::atan2(std::sqrt(-z), std::sqrt(1.0 + z)) - std::sqrt(-z * (1.0 + z));
            break;
    }
    return sign_of(branch) * (xc * y);
}

EmbeddingCurve integrate_embedding(Region region, double z_from, double z_to, int n_samples, double xc) {
    require_scale(xc);
    if (n_samples < 1) {
        throw ArgumentError("n_samples must be positive");
    }
    require_inside(z_from, region);
    require_inside(z_to, region);

    EmbeddingCurve curve{region, Branch::Plus, {}, xc};
    curve.samples.reserve(static_cast<std::size_t>(n_samples));
    const double step = n_samples > 1 ? (z_to - z_from) / (n_samples - 1) : 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double z = (i == n_samples - 1) ? z_to : z_from + i * step;
        curve.samples.push_back({xc * z, xc * anchored_integral(z, region)});
    }
    return curve;
}

std::vector<Region> admissible_regions(double z) {
    if (!std::isfinite(z)) {
        throw ArgumentError("z must be finite");
    }
    if (z == -1.0 || z == 0.0) {
        std::ostringstream out;
        out << "z = " << z << " is a region boundary";
        throw BoundaryError(out.str());
    }
    if (z < -1.0) {
        return {Region::I};
    }
    if (z > 0.0) {
        return {Region::II};
    }
    return {Region::II, Region::III};
}

std::vector<EmbeddingCurve> figure1_curves(double xc, double margin, int n) {
    require_scale(xc);
    if (!(margin > 0.0 && margin < 0.1)) {
        throw ArgumentError("margin must lie in (0, 0.1)");
    }
    if (n < 2) {
        throw ArgumentError("figure curves need at least 2 samples");
    }

    struct Span {
        Region region;
        double x_lo;
        double x_hi;
    };
    const Span spans[] = {
        {Region::I, -kFigureClip * xc, -xc - margin * xc},
        {Region::II, -xc + margin * xc, kFigureClip * xc},
        {Region::III, -xc + margin * xc, -margin * xc},
    };

    std::vector<EmbeddingCurve> curves;
    for (const Span& span : spans) {
        EmbeddingCurve plus{span.region, Branch::Plus, {}, xc};
        EmbeddingCurve minus{span.region, Branch::Minus, {}, xc};
        const double step = (span.x_hi - span.x_lo) / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double x = (i == n - 1) ? span.x_hi : span.x_lo + i * step;
            const double y = closed_form_y(x / xc, span.region, Branch::Plus, xc);
            plus.samples.push_back({x, y});
            minus.samples.push_back({x, -y});
        }
        curves.push_back(std::move(plus));
        curves.push_back(std::move(minus));
    }
    return curves;
}

}  // namespace numaxis
