#pragma once

#include <stdexcept>
#include <string>

namespace lcd {

// A caller broke an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A mathematical invariant that must hold for valid input failed; this means
// a bug in the implementation, never bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A configured enumeration or expansion limit was exceeded.
class CapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

}  // namespace lcd
