#pragma once

#include <stdexcept>
#include <string>

namespace arbor {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or incomplete tabular input (CSV parse, missing cell, bad header).
class LoadError : public Error {
public:
    using Error::Error;
};

/// A computation whose inputs collapse to nothing usable: constant columns,
/// single-point grids, stratifications with fewer than two intervals.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Argument or shape mismatch detected before any work is done.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Serialized forest payload that cannot be decoded.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace arbor
