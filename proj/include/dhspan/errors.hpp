#pragma once

#include <stdexcept>
#include <string>

namespace dhspan {

// Malformed input, unknown vertices, violated preconditions. CLI exit code 1.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Request falls outside a configured computation envelope. CLI exit code 2.
class EnvelopeExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A certificate or identity check failed internally. CLI exit code 3.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace dhspan
