#pragma once

namespace numaxis {

/// Parameters of the numeric-axis metric
///
///   ds^2 = f(x) c^2 dt^2 - dx^2 / f(x),   f(x) = 1 + x / x_c.
///
/// The 2-D metric is flat (it is a Rindler chart); no curvature is computed.
class MetricParams {
public:
    explicit MetricParams(double x_c = 1.0, double c = 1.0);

    double x_c() const noexcept { return x_c_; }
    double c() const noexcept { return c_; }
    double horizon() const noexcept { return -x_c_; }

private:
    double x_c_;
    double c_;
};

enum class IntervalKind { Timelike, Null, Spacelike };

struct Interval {
    double ds2;
    IntervalKind kind;
};

enum class HorizonSide { Exterior, Horizon, Interior };

const char* to_string(IntervalKind kind);
const char* to_string(HorizonSide side);

double conformal_factor(double x, const MetricParams& p);

/// Throws HorizonError at x = -x_c.
Interval interval_squared(double dt, double dx, double x, const MetricParams& p);

HorizonSide classify(double x, const MetricParams& p);

struct ProperLength {
    double closed_form;
    double quadrature;
};

/// Proper length between two exterior points, 2 x_c (sqrt(f(x2)) - sqrt(f(x1))).
/// The adaptive-quadrature value is computed alongside and must agree to
/// 1e-10. Throws HorizonError for endpoints at or beyond the horizon and
/// ArgumentError for x1 > x2.
ProperLength proper_length(double x1, double x2, const MetricParams& p);

}  // namespace numaxis
