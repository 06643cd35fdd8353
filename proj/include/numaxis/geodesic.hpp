#pragma once

#include "numaxis/metric.hpp"
#include "numaxis/rational.hpp"

#include <cstdint>
#include <vector>

namespace numaxis {

/// One point of a timelike worldline. eps = f dt/dtau is the conserved energy;
/// the normalization reads f c^2 (dt/dtau)^2 - ux^2 / f = c^2.
struct GeodesicState {
    double tau = 0.0;
    double t = 0.0;
    double x = 0.0;
    double ux = 0.0;
    double eps = 0.0;
};

enum class Termination { TauExhausted, HorizonReached, Diverged };

const char* to_string(Termination termination);

struct Trajectory {
    std::vector<GeodesicState> samples;
    Termination termination = Termination::TauExhausted;
};

// Integration stops once f(x) drops below this value.
inline constexpr double kHorizonStopFactor = 1e-9;

/// Starts a worldline at rest coordinate time t = 0, tau = 0, with
/// eps = sqrt(f c^2 + ux0^2) / c. Throws HorizonError unless x0 is exterior.
GeodesicState init_state(double x0, double ux0, const MetricParams& p);

/// Classical RK4 on x' = ux, ux' = -c^2 / (2 x_c), t' = eps / f with a fixed
/// step dtau. When a step would reduce f by more than half, the step is
/// halved until it does not, so the horizon is approached geometrically
/// instead of being stepped over. Requires dtau <= tau_max / 10.
Trajectory integrate(const GeodesicState& start, double tau_max, double dtau, const MetricParams& p);

// f c^2 (eps/f)^2 - ux^2/f - c^2 at the given state.
double normalization_residual(const GeodesicState& s, const MetricParams& p);

// eps recomputed from (x, ux) alone.
double energy_from_state(const GeodesicState& s, const MetricParams& p);

/// Distance covered in time n from speed 1/2 at constant acceleration 1:
/// n/2 + n^2/2, which equals 1 + 2 + ... + n.
Rational partial_sum_kinematics(std::uint64_t n);

}  // namespace numaxis
