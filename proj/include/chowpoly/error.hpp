#pragma once

#include <stdexcept>
#include <string>

namespace chowpoly {

// Malformed or inconsistent input: bad files, invalid posets, out-of-range
// arguments. The CLI maps these to exit code 1.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An exact computation could not be completed: nonzero remainder,
// non-palindromic input to the gamma basis, and similar.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace chowpoly
