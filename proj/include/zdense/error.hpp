#pragma once

#include <stdexcept>
#include <string>

namespace zdense {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (wrong shape, wrong degree, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Generators that fail the group-membership checks.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Random prime sampling gave up after its rejection cap.
class SamplingExhausted : public Error {
public:
    using Error::Error;
};

} // namespace zdense
