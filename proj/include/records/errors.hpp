#pragma once

#include <stdexcept>
#include <string>

namespace records {

// Caller violated a documented precondition (bad dimension, point outside
// the record-setting region, invalid flag combination, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation was asked to do more work than its contract allows
// (e.g. partition enumeration beyond the supported record count).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Quadrature failed to converge.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace records
