#ifndef CLOSURELAB_ERRORS_HPP
#define CLOSURELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace closurelab {

// Input text could not be parsed; message names the offending line.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured cap (subset space, vertex count, family size) was exceeded.
// The message names the cap so callers know which one to raise.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its contract.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (out-of-range vertex, empty index set, ...).
struct argument_error : precondition_error {
    using precondition_error::precondition_error;
};

} // namespace closurelab

#endif
