#pragma once

#include <stdexcept>
#include <string>

namespace numaxis {

// Bad call: malformed or out-of-contract arguments.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The mathematics refuses the request at this point of the domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation at or across x = -x_c, where 1 + x/x_c vanishes.
class HorizonError : public DomainError {
public:
    using DomainError::DomainError;
};

// Point outside the open interval of an embedding region.
class RegionError : public DomainError {
public:
    using DomainError::DomainError;
};

// Target plane signature cannot reproduce the metric (negative (dy/dx)^2).
class SignatureError : public DomainError {
public:
    using DomainError::DomainError;
};

// Point sits exactly on a region boundary (z = -1 or z = 0).
class BoundaryError : public DomainError {
public:
    using DomainError::DomainError;
};

// s = 1 for the zeta function.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Exact result would exceed the representable size.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace numaxis
