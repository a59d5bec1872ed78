#pragma once

#include <stdexcept>
#include <string>

namespace balis {

// Bad input: malformed files, invalid point sets, out-of-range parameters.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation was violated by the caller.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// A guarantee the theory promises did not hold at runtime. Always a bug,
// never a property of the input; the CLI maps this to exit code 3.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace balis
