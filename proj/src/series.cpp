#include "numaxis/series.hpp"

#include "numaxis/errors.hpp"
#include "numaxis/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace numaxis {

namespace {

// Faulhaber's formula is used up to this exponent (the shared Bernoulli table
// reaches B_62); larger exponents fall back to direct summation.
constexpr unsigned kFaulhaberMaxPower = 60;
constexpr std::uint64_t kDirectSumMaxTerms = 100000;

constexpr double kAbelAgreement = 1e-6;

void require_positive_count(std::uint64_t n) {
    if (n == 0) {
        throw ArgumentError("partial sums start at n = 1; got n = 0");
    }
}

void require_bits(double estimated_bits, const SeriesSpec& spec, std::uint64_t n) {
    if (estimated_bits > static_cast<double>(kMaxExactBits)) {
        throw RangeError("exact partial sum of " + spec.name() + " up to n = " + std::to_string(n) +
                         " needs about " + std::to_string(static_cast<long long>(estimated_bits)) +
                         " bits, above the limit of " + std::to_string(kMaxExactBits));
    }
}

Rational power_sum(unsigned k, std::uint64_t n) {
    const BigInt big_n = n;
    if (k <= kFaulhaberMaxPower) {
        // sum_{m=1}^{n} m^k = 1/(k+1) sum_j C(k+1, j) B+_j n^(k+1-j), with B+_1 = +1/2.
        const BernoulliTable& b = shared_bernoulli_table();
        Rational acc = 0;
        BigInt binom = 1;
        for (unsigned j = 0; j <= k; ++j) {
            Rational bj = b[j];
            if (j == 1) {
                bj = -bj;
            }
            if (bj != 0) {
                acc += Rational(binom) * bj * Rational(boost::multiprecision::pow(big_n, k + 1 - j));
            }
            binom = binom * (k + 1 - j) / (j + 1);
        }
        return acc / Rational(k + 1);
    }
    if (n > kDirectSumMaxTerms) {
        throw RangeError("power sums with k > " + std::to_string(kFaulhaberMaxPower) +
                         " are limited to n <= " + std::to_string(kDirectSumMaxTerms));
    }
    BigInt acc = 0;
    for (std::uint64_t m = 1; m <= n; ++m) {
        acc += boost::multiprecision::pow(BigInt(m), k);
    }
    return Rational(acc);
}

// Extrapolates the values at t_0, t_1, t_2 (t = 1 - x) to t = 0 with the
// interpolating quadratic.
double extrapolate_to_one(const double t[3], const double v[3]) {
    double result = 0.0;
    for (int i = 0; i < 3; ++i) {
        double weight = 1.0;
        for (int j = 0; j < 3; ++j) {
            if (j != i) {
                weight *= (0.0 - t[j]) / (t[i] - t[j]);
            }
        }
        result += weight * v[i];
    }
    return result;
}

std::string format_grid(std::span<const double> grid) {
    std::ostringstream out;
    out.precision(12);
    out << "grid={";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << (i ? "," : "") << grid[i];
    }
    out << "}";
    return out.str();
}

}  // namespace

SeriesSpec SeriesSpec::geometric(double r) {
    if (!std::isfinite(r)) {
        throw ArgumentError("geometric ratio must be finite");
    }
    return SeriesSpec(SeriesKind::Geometric, 0, r);
}

double SeriesSpec::term(std::uint64_t n) const {
    const auto x = static_cast<double>(n);
    switch (kind_) {
        case SeriesKind::Ones:
            return 1.0;
        case SeriesKind::Naturals:
            return x;
        case SeriesKind::PowerOfN:
            return std::pow(x, static_cast<double>(power_));
        case SeriesKind::Grandi:
            return (n % 2 == 1) ? 1.0 : -1.0;
        case SeriesKind::Geometric:
            return std::pow(ratio_, x);
    }
    return 0.0;
}

Rational SeriesSpec::exact_term(std::uint64_t n) const {
    switch (kind_) {
        case SeriesKind::Ones:
            return Rational(1);
        case SeriesKind::Naturals:
            return Rational(BigInt(n));
        case SeriesKind::PowerOfN:
            return Rational(boost::multiprecision::pow(BigInt(n), power_));
        case SeriesKind::Grandi:
            return Rational((n % 2 == 1) ? 1 : -1);
        case SeriesKind::Geometric: {
            const Rational r = exact_rational(ratio_);
            return Rational(boost::multiprecision::pow(boost::multiprecision::numerator(r),
                                                       static_cast<unsigned>(n)),
                            boost::multiprecision::pow(boost::multiprecision::denominator(r),
                                                       static_cast<unsigned>(n)));
        }
    }
    return Rational(0);
}

std::string SeriesSpec::name() const {
    switch (kind_) {
        case SeriesKind::Ones:
            return "ones";
        case SeriesKind::Naturals:
            return "naturals";
        case SeriesKind::PowerOfN:
            return "power:" + std::to_string(power_);
        case SeriesKind::Grandi:
            return "grandi";
        case SeriesKind::Geometric: {
            std::ostringstream out;
            out.precision(17);
            out << "geometric:" << ratio_;
            return out.str();
        }
    }
    return "unknown";
}

std::string to_string(SummationMethod method) {
    switch (method) {
        case SummationMethod::PartialSumLimit:
            return "partial";
        case SummationMethod::Cesaro:
            return "cesaro";
        case SummationMethod::Abel:
            return "abel";
        case SummationMethod::ZetaRegularized:
            return "zeta-reg";
    }
    return "unknown";
}

Rational partial_sum(const SeriesSpec& spec, std::uint64_t n) {
    require_positive_count(n);
    const BigInt big_n = n;
    switch (spec.kind()) {
        case SeriesKind::Ones:
            return Rational(big_n);
        case SeriesKind::Naturals:
            return Rational(big_n * (big_n + 1) / 2);
        case SeriesKind::Grandi:
            return Rational(n % 2 == 1 ? 1 : 0);
        case SeriesKind::PowerOfN:
            require_bits((spec.power() + 1.0) * std::log2(static_cast<double>(n)) + 1.0, spec, n);
            return power_sum(spec.power(), n);
        case SeriesKind::Geometric: {
            const Rational r = exact_rational(spec.ratio());
            if (r == 1) {
                return Rational(big_n);
            }
            if (r == 0) {
                return Rational(0);
            }
            if (r == -1) {
                return Rational(n % 2 == 1 ? -1 : 0);
            }
            require_bits(static_cast<double>(bit_size(r)) * (static_cast<double>(n) + 1.0), spec, n);
            // r (1 - r^n) / (1 - r)
            const auto exponent = static_cast<unsigned>(n);
            const Rational r_n(boost::multiprecision::pow(boost::multiprecision::numerator(r), exponent),
                               boost::multiprecision::pow(boost::multiprecision::denominator(r), exponent));
            return r * (Rational(1) - r_n) / (Rational(1) - r);
        }
    }
    return Rational(0);
}

SummationResult cesaro_sum(const SeriesSpec& spec, std::uint64_t n_max, double tol) {
    if (n_max < 10) {
        throw ArgumentError("cesaro_sum needs n_max >= 10, got " + std::to_string(n_max));
    }
    if (!(tol > 0.0)) {
        throw ArgumentError("cesaro_sum needs a positive tolerance");
    }

    // cumulative[m] = S_1 + ... + S_m
    std::vector<long double> cumulative(n_max + 1, 0.0L);
    long double partial = 0.0L;
    for (std::uint64_t m = 1; m <= n_max; ++m) {
        partial += spec.term(m);
        cumulative[m] = cumulative[m - 1] + partial;
    }

    const std::uint64_t trailing = std::max<std::uint64_t>(1, n_max / 10);
    const std::uint64_t width = std::max<std::uint64_t>(2, 2 * (n_max / 20));
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double last = 0.0;
    bool finite = true;
    for (std::uint64_t m = n_max - trailing; m <= n_max; ++m) {
        const auto estimate =
            static_cast<double>((cumulative[m] - cumulative[m - width]) / static_cast<long double>(width));
        finite = finite && std::isfinite(estimate);
        lo = std::min(lo, estimate);
        hi = std::max(hi, estimate);
        last = estimate;
    }
    const double spread = hi - lo;
    const double plain_mean = static_cast<double>(cumulative[n_max] / static_cast<long double>(n_max));

    std::ostringstream diag;
    diag.precision(12);
    diag << "n_max=" << n_max << " window=" << width << " trailing=" << trailing << " spread=" << spread
         << " mean=" << plain_mean;

    SummationResult result{SummationMethod::Cesaro, std::nullopt, {}};
    if (finite && spread < tol) {
        result.value = last;
    } else {
        diag << " (means did not stabilize within tol=" << tol << ")";
    }
    result.diagnostics = diag.str();
    return result;
}

double abel_generating_function(const SeriesSpec& spec, double x) {
    if (!(x > -1.0 && x < 1.0)) {
        throw ArgumentError("Abel evaluation point must lie in (-1, 1)");
    }
    switch (spec.kind()) {
        case SeriesKind::Ones:
            return x / (1.0 - x);
        case SeriesKind::Naturals:
            return x / ((1.0 - x) * (1.0 - x));
        case SeriesKind::Grandi:
            return x / (1.0 + x);
        case SeriesKind::Geometric: {
            const double rx = spec.ratio() * x;
            if (std::abs(rx) >= 1.0) {
                return std::numeric_limits<double>::infinity();
            }
            return rx / (1.0 - rx);
        }
        case SeriesKind::PowerOfN: {
            // sum n^k x^n = x A_k(x) / (1-x)^(k+1), A_k the Eulerian polynomial.
            const unsigned k = spec.power();
            if (k == 0) {
                return x / (1.0 - x);
            }
            std::vector<double> eulerian{1.0};
            for (unsigned row = 2; row <= k; ++row) {
                std::vector<double> next(row, 0.0);
                for (unsigned m = 0; m < row; ++m) {
                    const double keep = m < eulerian.size() ? (m + 1.0) * eulerian[m] : 0.0;
                    const double shift = m >= 1 ? (row - m) * eulerian[m - 1] : 0.0;
                    next[m] = keep + shift;
                }
                eulerian = std::move(next);
            }
            double poly = 0.0;
            for (auto it = eulerian.rbegin(); it != eulerian.rend(); ++it) {
                poly = poly * x + *it;
            }
            return x * poly / std::pow(1.0 - x, static_cast<double>(k + 1));
        }
    }
    return 0.0;
}

SummationResult abel_sum(const SeriesSpec& spec, std::span<const double> x_grid) {
    if (x_grid.size() < 5) {
        throw ArgumentError("Abel grid needs at least 5 points, got " + std::to_string(x_grid.size()));
    }
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (!(x_grid[i] > 0.0 && x_grid[i] < 1.0)) {
            throw ArgumentError("Abel grid points must lie in (0, 1)");
        }
        if (i > 0 && !(x_grid[i] > x_grid[i - 1])) {
            throw ArgumentError("Abel grid must be strictly ascending");
        }
    }

    std::vector<double> values;
    values.reserve(x_grid.size());
    for (double x : x_grid) {
        values.push_back(abel_generating_function(spec, x));
    }

    SummationResult result{SummationMethod::Abel, std::nullopt, format_grid(x_grid)};
    if (!std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); })) {
        result.diagnostics += " (power series diverges on the grid)";
        return result;
    }

    std::vector<double> extrapolants;
    for (std::size_t i = 2; i < values.size(); ++i) {
        const double t[3] = {1.0 - x_grid[i - 2], 1.0 - x_grid[i - 1], 1.0 - x_grid[i]};
        const double v[3] = {values[i - 2], values[i - 1], values[i]};
        extrapolants.push_back(extrapolate_to_one(t, v));
    }
    const double last = extrapolants.back();
    const double previous = extrapolants[extrapolants.size() - 2];
    const double change = std::abs(last - previous);

    std::ostringstream diag;
    diag.precision(12);
    diag << " extrapolant=" << last << " change=" << change;
    result.diagnostics += diag.str();
    if (std::isfinite(last) && change <= kAbelAgreement * std::max(1.0, std::abs(last))) {
        result.value = last;
    } else {
        result.diagnostics += " (values diverge as x -> 1)";
    }
    return result;
}

SummationResult zeta_regularized_sum(unsigned k) {
    if (k > 10) {
        throw ArgumentError("zeta regularization is provided for k <= 10, got k = " + std::to_string(k));
    }
    const ZetaResult z = zeta_continued({-static_cast<double>(k), 0.0});
    std::ostringstream diag;
    diag.precision(3);
    diag << "zeta(-" << k << ") by Euler-Maclaurin, N=" << kDefaultZetaTerms << " M=" << kDefaultZetaOrder
         << " est_error=" << z.est_error;
    return {SummationMethod::ZetaRegularized, z.value.real(), diag.str()};
}

}  // namespace numaxis
