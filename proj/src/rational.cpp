#include "numaxis/rational.hpp"

#include "numaxis/errors.hpp"

#include <cmath>
#include <cstdint>

namespace numaxis {

Rational exact_rational(double value) {
    if (!std::isfinite(value)) {
        throw ArgumentError("cannot convert a non-finite value to a rational");
    }
    if (value == 0.0) {
        return Rational(0);
    }
    int exponent = 0;
    const double fraction = std::frexp(value, &exponent);  // |fraction| in [0.5, 1)
    const auto mantissa = static_cast<std::int64_t>(std::ldexp(fraction, 53));
    exponent -= 53;
    Rational result(mantissa);
    if (exponent > 0) {
        result *= Rational(BigInt(1) << exponent);
    } else if (exponent < 0) {
        result /= Rational(BigInt(1) << -exponent);
    }
    return result;
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

std::string to_string(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

std::size_t bit_size(const Rational& value) {
    const BigInt num = boost::multiprecision::abs(boost::multiprecision::numerator(value));
    const BigInt den = boost::multiprecision::denominator(value);
    const std::size_t num_bits = num == 0 ? 0 : boost::multiprecision::msb(num) + 1;
    const std::size_t den_bits = boost::multiprecision::msb(den) + 1;
    return num_bits > den_bits ? num_bits : den_bits;
}

}  // namespace numaxis
