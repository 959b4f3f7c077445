#pragma once

#include <stdexcept>
#include <string>

namespace hcc {

/// Base class of every exception thrown by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent scalar arithmetic (division by zero, mixed fields).
class ScalarError : public Error {
public:
    using Error::Error;
};

/// Shapes of spaces or maps do not fit together.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation is violated.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A degree-bounded construction would exceed the configured size cap.
class DegreeCapError : public Error {
public:
    using Error::Error;
};

/// Structure files that fail to parse or validate.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace hcc
