#include "numaxis/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace numaxis {

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol) {
    if (a == b) {
        return {0.0, 0.0};
    }
    constexpr unsigned kMaxDepth = 30;
    double error = 0.0;
    double l1 = 0.0;
    // Boost's tolerance is relative to the L1 norm; rescale from the first pass.
    double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, kMaxDepth,
                                                                                  1e-10, &error, &l1);
    if (l1 > 0.0 && error > abs_tol) {
        const double rel_tol = std::max(abs_tol / l1, 4.0 * std::numeric_limits<double>::epsilon());
        value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, kMaxDepth, rel_tol,
                                                                              &error, &l1);
    }
    return {value, error};
}

}  // namespace numaxis
