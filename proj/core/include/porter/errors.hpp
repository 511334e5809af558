#pragma once

#include <stdexcept>
#include <string>

namespace porter {

// Invalid arguments or malformed problem data supplied by the caller.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A file or document could not be decoded into the expected schema.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No feasible answer exists under the stated constraints.
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A hard size or safety limit was exceeded.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The instance is too small for the requested operation.
struct degenerate_error : input_error {
    using input_error::input_error;
};

}  // namespace porter
