#include "numaxis/metric.hpp"

#include "numaxis/errors.hpp"
#include "numaxis/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace numaxis {

namespace {

constexpr double kLengthAgreement = 1e-10;
// Below this value of f the segment is integrated in w = sqrt(f).
constexpr double kNearHorizonFactor = 0.25;

std::string horizon_message(const std::string& what, double x, const MetricParams& p) {
    std::ostringstream out;
    out.precision(12);
    out << what << " at x = " << x << ": horizon at x = " << p.horizon() << " (-x_c)";
    return out.str();
}

}  // namespace

MetricParams::MetricParams(double x_c, double c) : x_c_(x_c), c_(c) {
    if (!(x_c > 0.0) || !std::isfinite(x_c)) {
        throw ArgumentError("x_c must be a positive finite number");
    }
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw ArgumentError("c must be a positive finite number");
    }
}

const char* to_string(IntervalKind kind) {
    switch (kind) {
        case IntervalKind::Timelike:
            return "timelike";
        case IntervalKind::Null:
            return "null";
        case IntervalKind::Spacelike:
            return "spacelike";
    }
    return "unknown";
}

const char* to_string(HorizonSide side) {
    switch (side) {
        case HorizonSide::Exterior:
            return "exterior";
        case HorizonSide::Horizon:
            return "horizon";
        case HorizonSide::Interior:
            return "interior";
    }
    return "unknown";
}

double conformal_factor(double x, const MetricParams& p) {
    return 1.0 + x / p.x_c();
}

Interval interval_squared(double dt, double dx, double x, const MetricParams& p) {
    const double f = conformal_factor(x, p);
    if (f == 0.0) {
        throw HorizonError(horizon_message("interval undefined", x, p));
    }
    const double c = p.c();
    const double ds2 = f * c * c * dt * dt - dx * dx / f;
    const IntervalKind kind = ds2 > 0.0   ? IntervalKind::Timelike
                              : ds2 < 0.0 ? IntervalKind::Spacelike
                                          : IntervalKind::Null;
    return {ds2, kind};
}

HorizonSide classify(double x, const MetricParams& p) {
    const double f = conformal_factor(x, p);
    if (f > 0.0) {
        return HorizonSide::Exterior;
    }
    return f == 0.0 ? HorizonSide::Horizon : HorizonSide::Interior;
}

ProperLength proper_length(double x1, double x2, const MetricParams& p) {
    for (double x : {x1, x2}) {
        if (classify(x, p) != HorizonSide::Exterior) {
            throw HorizonError(horizon_message("proper length needs exterior endpoints, got endpoint", x, p));
        }
    }
    if (x1 > x2) {
        throw ArgumentError("proper_length expects x1 <= x2");
    }
    const double xc = p.x_c();
    const double f1 = conformal_factor(x1, p);
    const double f2 = conformal_factor(x2, p);
    const double closed = 2.0 * xc * (std::sqrt(f2) - std::sqrt(f1));

    // Near the horizon 1/sqrt(f) is singular; with w = sqrt(f), dx = 2 x_c w dw
    // and the integrand becomes the constant 2 x_c.
    double quad = 0.0;
    double x_split = x1;
    if (f1 < kNearHorizonFactor) {
        const double w_top = std::sqrt(std::min(f2, kNearHorizonFactor));
        quad += integrate_adaptive([xc](double) { return 2.0 * xc; }, std::sqrt(f1), w_top).value;
        x_split = std::min(x2, xc * (kNearHorizonFactor - 1.0));
    }
    if (x_split < x2) {
        quad += integrate_adaptive([&p](double x) { return 1.0 / std::sqrt(conformal_factor(x, p)); },
                                   x_split, x2)
                    .value;
    }

    if (std::abs(closed - quad) > kLengthAgreement * std::max(1.0, std::abs(closed))) {
        std::ostringstream out;
        out.precision(17);
        out << "proper length quadrature " << quad << " disagrees with closed form " << closed;
        throw std::logic_error(out.str());
    }
    return {closed, quad};
}

}  // namespace numaxis
