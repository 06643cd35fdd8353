#pragma once

#include "numaxis/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace numaxis {

enum class SeriesKind { Ones, Naturals, PowerOfN, Grandi, Geometric };

/// One of the built-in series families, indexed from n = 1.
///
/// Terms: Ones -> 1, Naturals -> n, PowerOfN(k) -> n^k, Grandi -> (-1)^(n+1),
/// Geometric(r) -> r^n.
class SeriesSpec {
public:
    static SeriesSpec ones() { return SeriesSpec(SeriesKind::Ones, 0, 0.0); }
    static SeriesSpec naturals() { return SeriesSpec(SeriesKind::Naturals, 1, 0.0); }
    static SeriesSpec power_of_n(unsigned k) { return SeriesSpec(SeriesKind::PowerOfN, k, 0.0); }
    static SeriesSpec grandi() { return SeriesSpec(SeriesKind::Grandi, 0, 0.0); }
    static SeriesSpec geometric(double r);

    SeriesKind kind() const noexcept { return kind_; }
    // Exponent k of the terms n^k (0 for Ones, 1 for Naturals).
    unsigned power() const noexcept { return power_; }
    double ratio() const noexcept { return ratio_; }

    double term(std::uint64_t n) const;
    Rational exact_term(std::uint64_t n) const;

    std::string name() const;

private:
    SeriesSpec(SeriesKind kind, unsigned power, double ratio)
        : kind_(kind), power_(power), ratio_(ratio) {}

    SeriesKind kind_;
    unsigned power_;
    double ratio_;
};

enum class SummationMethod { PartialSumLimit, Cesaro, Abel, ZetaRegularized };

std::string to_string(SummationMethod method);

/// Outcome of a summation attempt. A method that cannot assign a sum leaves
/// `value` empty; the method is always recorded.
struct SummationResult {
    SummationMethod method;
    std::optional<double> value;
    std::string diagnostics;

    bool assigned() const noexcept { return value.has_value(); }
};

// Largest exact result (in bits of numerator or denominator) partial_sum will build.
inline constexpr std::size_t kMaxExactBits = 1u << 16;

/// Exact sum of the first n terms. Throws ArgumentError for n == 0 and
/// RangeError when the exact result would exceed kMaxExactBits.
Rational partial_sum(const SeriesSpec& spec, std::uint64_t n);

/// Cesaro (C,1) summation over the first n_max partial sums.
///
/// The estimate at index m is the mean of the partial sums S_{m-w+1} .. S_m
/// for a window w of about n_max/10 (kept even). Each estimate equals
/// (m * sigma_m - (m - w) * sigma_{m-w}) / w, where sigma are the ordinary
/// arithmetic means, so it tends to the (C,1) limit whenever that exists, and
/// it cancels the 1/m bias of sigma_m. The sum is assigned when the
/// estimates over the trailing 10% of indices differ by less than tol.
SummationResult cesaro_sum(const SeriesSpec& spec, std::uint64_t n_max, double tol);

/// Abel summation: evaluates sum term(n) x^n on an ascending grid in (0, 1)
/// and extrapolates to x -> 1-. Unassigned when the extrapolants do not settle.
SummationResult abel_sum(const SeriesSpec& spec, std::span<const double> x_grid);

/// Closed form of sum_{n>=1} term(n) x^n for |x| < 1. Returns +inf when the
/// power series diverges at x.
double abel_generating_function(const SeriesSpec& spec, double x);

/// Assigns sum n^k the continued value zeta(-k). Requires k <= 10.
SummationResult zeta_regularized_sum(unsigned k);

}  // namespace numaxis
