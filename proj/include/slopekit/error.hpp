#pragma once

#include <stdexcept>
#include <string>

namespace slopekit {

// Precondition violated by the caller (bad range, non-coprime parameters, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is well formed but outside the regime the computation is valid for.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two objects cannot be compared by the criterion that was asked for.
class NotComparable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace slopekit
