#pragma once

#include <stdexcept>
#include <string>

namespace isurf {

// Malformed or unparsable input (CLI exit code 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates an operation's preconditions (CLI exit code 3).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested case is outside what the implementation covers.
class UnsupportedError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

}  // namespace isurf
