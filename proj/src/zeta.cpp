#include "numaxis/zeta.hpp"

#include "numaxis/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace numaxis {

namespace {

using Complex = std::complex<double>;

std::vector<Rational> bernoulli_sequence(std::size_t last_index) {
    std::vector<Rational> b;
    b.reserve(last_index + 1);
    b.emplace_back(1);
    for (std::size_t m = 1; m <= last_index; ++m) {
        // C(m+1, j) for j = 0 .. m-1, built incrementally.
        BigInt binom = 1;
        Rational acc = 0;
        for (std::size_t j = 0; j < m; ++j) {
            acc += Rational(binom) * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b.push_back(-acc / Rational(static_cast<unsigned long long>(m + 1)));
    }
    return b;
}

// B_2k / (2k)! for k = 0 .. order+1.
const std::vector<double>& euler_maclaurin_coefficients() {
    static const std::vector<double> coefficients = [] {
        const BernoulliTable& table = shared_bernoulli_table();
        std::vector<double> out;
        BigInt factorial = 1;
        for (std::size_t k = 0; 2 * k < table.size(); ++k) {
            if (k > 0) {
                factorial *= (2 * k - 1) * (2 * k);
            }
            out.push_back(to_double(table[2 * k] / Rational(factorial)));
        }
        return out;
    }();
    return coefficients;
}

Complex power(double base, Complex exponent) {
    return std::exp(exponent * std::log(base));
}

// Borwein's accelerated alternating series for eta(s), Re(s) > 0.
Complex eta_borwein(Complex s) {
    constexpr int n = 48;
    std::array<double, n + 1> d{};
    double term = 1.0 / n;
    double running = term;
    d[0] = n * running;
    for (int i = 0; i < n; ++i) {
        term *= 4.0 * (n + i) * (n - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
        running += term;
        d[i + 1] = n * running;
    }
    Complex sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sign * (d[k] - d[n]) * power(static_cast<double>(k + 1), -s);
    }
    return -sum / d[n];
}

}  // namespace

BernoulliTable bernoulli_numbers(int M) {
    if (M < 1 || M > kMaxBernoulliOrder) {
        throw ArgumentError("Bernoulli order M must lie in [1, " +
                            std::to_string(kMaxBernoulliOrder) + "], got " + std::to_string(M));
    }
    return BernoulliTable(bernoulli_sequence(2 * static_cast<std::size_t>(M)));
}

const BernoulliTable& shared_bernoulli_table() {
    static const BernoulliTable table(bernoulli_sequence(2 * (kMaxBernoulliOrder + 1)));
    return table;
}

ZetaResult zeta_continued(ZetaArgument arg, int N, int M) {
    if (N < 2) {
        throw ArgumentError("zeta_continued needs N >= 2, got " + std::to_string(N));
    }
    if (M < 1 || M > kMaxBernoulliOrder) {
        throw ArgumentError("zeta_continued needs M in [1, " + std::to_string(kMaxBernoulliOrder) +
                            "], got " + std::to_string(M));
    }
    if (arg.u == 1.0 && arg.v == 0.0) {
        throw PoleError("zeta has a simple pole at s = 1");
    }
    if (!(arg.u > 1.0 - 2.0 * M)) {
        const int required = static_cast<int>(std::floor((1.0 - arg.u) / 2.0)) + 1;
        throw ArgumentError("Re(s) = " + std::to_string(arg.u) + " is outside the strip Re(s) > " +
                            std::to_string(1 - 2 * M) + " of order M = " + std::to_string(M) +
                            "; M >= " + std::to_string(required) + " is required");
    }

    const Complex s = arg.value();
    const auto& coefficients = euler_maclaurin_coefficients();
    const double n_top = N;

    Complex value = 0.0;
    for (int n = 1; n < N; ++n) {
        value += power(static_cast<double>(n), -s);
    }
    const Complex n_pow = power(n_top, -s);
    value += n_top * n_pow / (s - 1.0) + 0.5 * n_pow;

    // poch = s (s+1) ... (s+2k-2); scale = N^(-s-2k+1)
    Complex poch = s;
    Complex scale = n_pow / n_top;
    const double inv_n2 = 1.0 / (n_top * n_top);
    for (int k = 1; k <= M; ++k) {
        value += coefficients[k] * poch * scale;
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        scale *= inv_n2;
    }
    const double est_error = std::abs(coefficients[M + 1] * poch * scale);
    return {value, ZetaMethod::EulerMaclaurin, est_error};
}

ZetaResult zeta_reflected(ZetaArgument arg) {
    if (!(arg.u < 0.0)) {
        throw ArgumentError("zeta_reflected requires Re(s) < 0, got Re(s) = " + std::to_string(arg.u));
    }
    const Complex s = arg.value();
    const Complex one_minus_s = 1.0 - s;
    const Complex zeta_mirror = eta_borwein(one_minus_s) / (1.0 - power(2.0, s));
    const Complex value = power(2.0, s) * power(std::numbers::pi, s - 1.0) *
                          std::sin(std::numbers::pi * s / 2.0) * gamma(one_minus_s) * zeta_mirror;
    // Lanczos and the eta series are both good to a few ulps on this range.
    const double est_error = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
    return {value, ZetaMethod::FunctionalEquation, est_error};
}

ZetaResult zeta_direct(ZetaArgument arg, long terms) {
    if (!(arg.u > 1.0)) {
        throw ArgumentError("direct summation requires Re(s) > 1, got Re(s) = " + std::to_string(arg.u));
    }
    if (terms < 1) {
        throw ArgumentError("direct summation needs at least one term");
    }
    const Complex s = arg.value();
    Complex value = 0.0;
    for (long n = terms; n >= 1; --n) {
        value += power(static_cast<double>(n), -s);
    }
    const double n_top = static_cast<double>(terms);
    const Complex n_pow = power(n_top, -s);
    value += n_top * n_pow / (s - 1.0) - 0.5 * n_pow;
    const double est_error = std::abs(s * n_pow / n_top) / 12.0;
    return {value, ZetaMethod::DirectSum, est_error};
}

std::complex<double> gamma(std::complex<double> z) {
    static constexpr double g = 7.0;
    static constexpr std::array<double, 9> p = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    if (z.real() < 0.5) {
        return std::numbers::pi / (std::sin(std::numbers::pi * z) * gamma(1.0 - z));
    }
    z -= 1.0;
    Complex x = p[0];
    for (std::size_t i = 1; i < p.size(); ++i) {
        x += p[i] / (z + static_cast<double>(i));
    }
    const Complex t = z + g + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace numaxis
