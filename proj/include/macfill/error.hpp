#pragma once

#include <stdexcept>
#include <string>

namespace macfill {

// Raised for malformed or out-of-contract inputs (bad shapes, non-partition
// content, size mismatches). The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive check finds data contradicting an identity.
// The CLI maps this to exit code 1.
class Counterexample : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace macfill
