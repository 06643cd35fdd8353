#pragma once

#include "numaxis/rational.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace numaxis {

/// s = u + iv.
struct ZetaArgument {
    double u = 0.0;
    double v = 0.0;

    std::complex<double> value() const noexcept { return {u, v}; }
};

enum class ZetaMethod { DirectSum, EulerMaclaurin, FunctionalEquation };

struct ZetaResult {
    std::complex<double> value;
    ZetaMethod method;
    double est_error;
};

/// Bernoulli numbers B_0 .. B_{2M} as exact rationals, with B_1 = -1/2.
class BernoulliTable {
public:
    explicit BernoulliTable(std::vector<Rational> values) : values_(std::move(values)) {}

    const Rational& operator[](std::size_t m) const { return values_.at(m); }
    std::size_t size() const noexcept { return values_.size(); }
    // The M of B_0 .. B_{2M}.
    int order() const noexcept { return static_cast<int>((values_.size() - 1) / 2); }

private:
    std::vector<Rational> values_;
};

inline constexpr int kMaxBernoulliOrder = 30;
inline constexpr int kDefaultZetaTerms = 20;
inline constexpr int kDefaultZetaOrder = 10;

/// From sum_{j=0}^{m} C(m+1, j) B_j = 0. Requires 1 <= M <= 30.
BernoulliTable bernoulli_numbers(int M);

// Process-wide table of order kMaxBernoulliOrder + 1, built once.
const BernoulliTable& shared_bernoulli_table();

/// Euler-Maclaurin continuation of sum n^-s:
///
///   sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
///     + sum_{k=1}^{M} B_2k/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1)
///
/// valid for Re(s) > 1 - 2M. est_error is the size of the first omitted
/// correction. Throws PoleError at s = 1, ArgumentError outside the strip.
ZetaResult zeta_continued(ZetaArgument s, int N = kDefaultZetaTerms, int M = kDefaultZetaOrder);

/// zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s) for Re(s) < 0, with
/// zeta(1-s) taken from an accelerated alternating (eta) series. Shares no code
/// with zeta_continued.
ZetaResult zeta_reflected(ZetaArgument s);

/// Plain partial sum of n^-s for n <= terms plus the integral tail
/// terms^(1-s)/(s-1). Requires Re(s) > 1.
ZetaResult zeta_direct(ZetaArgument s, long terms);

/// Lanczos approximation (g = 7, 9 terms), reflected for Re(z) < 1/2.
std::complex<double> gamma(std::complex<double> z);

}  // namespace numaxis
