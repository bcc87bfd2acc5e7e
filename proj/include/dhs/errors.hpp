#pragma once

#include <stdexcept>

namespace dhs {

// Rejected input: out-of-range argument, invalid discretisation parameter,
// degenerate geometry. The CLI maps this to exit code 3.
class invalid_parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A claim the model guarantees analytically failed to hold at runtime.
// The CLI maps this to exit code 4; it is the test suite's tripwire.
class invariant_breach_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require_invariant(bool ok, const char* what) {
    if (!ok)
        throw invariant_breach_error(what);
}

} // namespace dhs
