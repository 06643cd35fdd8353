#include "numaxis/geodesic.hpp"

#include "numaxis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace numaxis {

namespace {

// Halvings allowed for a single step before giving up.
constexpr int kMaxHalvings = 60;

struct Derivative {
    double dx;
    double dux;
    double dt;
};

}  // namespace

const char* to_string(Termination termination) {
    switch (termination) {
        case Termination::TauExhausted:
            return "tau-exhausted";
        case Termination::HorizonReached:
            return "horizon-reached";
        case Termination::Diverged:
            return "diverged";
    }
    return "unknown";
}

GeodesicState init_state(double x0, double ux0, const MetricParams& p) {
    if (!std::isfinite(x0) || !std::isfinite(ux0)) {
        throw ArgumentError("initial position and velocity must be finite");
    }
    if (classify(x0, p) != HorizonSide::Exterior) {
        std::ostringstream out;
        out.precision(12);
        out << "geodesic must start outside the horizon at x = " << p.horizon() << " (-x_c); got x0 = " << x0;
        throw HorizonError(out.str());
    }
    const double f = conformal_factor(x0, p);
    const double c = p.c();
    GeodesicState s;
    s.x = x0;
    s.ux = ux0;
    s.eps = std::sqrt(f * (c * c + ux0 * ux0 / f)) / c;
    return s;
}

Trajectory integrate(const GeodesicState& start, double tau_max, double dtau, const MetricParams& p) {
    if (!(tau_max > 0.0) || !(dtau > 0.0)) {
        throw ArgumentError("tau_max and dtau must be positive");
    }
    if (dtau > tau_max / 10.0) {
        throw ArgumentError("dtau must not exceed tau_max / 10");
    }
    if (classify(start.x, p) != HorizonSide::Exterior) {
        std::ostringstream out;
        out.precision(12);
        out << "geodesic must start outside the horizon at x = " << p.horizon() << " (-x_c)";
        throw HorizonError(out.str());
    }

    const double accel = -p.c() * p.c() / (2.0 * p.x_c());
    const double eps = start.eps;
    auto rhs = [&](double x, double ux) -> Derivative {
        return {ux, accel, eps / conformal_factor(x, p)};
    };

    Trajectory traj;
    traj.samples.push_back(start);
    const double tau_end = start.tau + tau_max;

    // Regular steps land on tau_base + k dtau so the grid does not drift.
    double tau_base = start.tau;
    std::uint64_t k = 0;
    GeodesicState s = start;

    while (s.tau < tau_end) {
        double tau_next = std::min(tau_base + static_cast<double>(k + 1) * dtau, tau_end);
        double h = tau_next - s.tau;
        const double f_now = conformal_factor(s.x, p);

        GeodesicState next;
        bool accepted = false;
        bool halved = false;
        for (int attempt = 0; attempt <= kMaxHalvings; ++attempt) {
            const Derivative k1 = rhs(s.x, s.ux);
            const Derivative k2 = rhs(s.x + 0.5 * h * k1.dx, s.ux + 0.5 * h * k1.dux);
            const Derivative k3 = rhs(s.x + 0.5 * h * k2.dx, s.ux + 0.5 * h * k2.dux);
            const double x_end = s.x + h * k3.dx;
            const Derivative k4 = rhs(x_end, s.ux + h * k3.dux);

            next.tau = tau_next;
            next.x = s.x + h / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
            next.ux = s.ux + h / 6.0 * (k1.dux + 2.0 * k2.dux + 2.0 * k3.dux + k4.dux);
            next.t = s.t + h / 6.0 * (k1.dt + 2.0 * k2.dt + 2.0 * k3.dt + k4.dt);
            next.eps = eps;

            const double f_end = conformal_factor(next.x, p);
            const double f_probe = conformal_factor(x_end, p);
            if (f_end >= 0.5 * f_now && f_probe >= 0.5 * f_now) {
                accepted = true;
                break;
            }
            halved = true;
            h *= 0.5;
            tau_next = s.tau + h;
        }
        if (!accepted) {
            traj.termination = Termination::Diverged;
            return traj;
        }

        s = next;
        if (halved) {
            tau_base = s.tau;
            k = 0;
        } else {
            ++k;
        }
        if (!std::isfinite(s.x) || !std::isfinite(s.ux) || !std::isfinite(s.t)) {
            traj.termination = Termination::Diverged;
            return traj;
        }
        traj.samples.push_back(s);
        if (conformal_factor(s.x, p) < kHorizonStopFactor) {
            traj.termination = Termination::HorizonReached;
            return traj;
        }
    }
    traj.termination = Termination::TauExhausted;
    return traj;
}

double normalization_residual(const GeodesicState& s, const MetricParams& p) {
    const double f = conformal_factor(s.x, p);
    const double c = p.c();
    const double dt_dtau = s.eps / f;
    return f * c * c * dt_dtau * dt_dtau - s.ux * s.ux / f - c * c;
}

double energy_from_state(const GeodesicState& s, const MetricParams& p) {
    const double f = conformal_factor(s.x, p);
    const double c = p.c();
    return std::sqrt(f * c * c + s.ux * s.ux) / c;
}

Rational partial_sum_kinematics(std::uint64_t n) {
    if (n == 0) {
        throw ArgumentError("kinematic partial sum needs n >= 1");
    }
    const Rational v0(1, 2);
    const Rational a(1);
    const Rational time(BigInt{n});
    return v0 * time + a * time * time / 2;
}

}  // namespace numaxis
