#pragma once

#include <stdexcept>
#include <string>

namespace gerst {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions n.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A cochain has the wrong arity (or is not arity-homogeneous) for the operation.
class ArityError : public Error {
public:
    using Error::Error;
};

/// Any other violated precondition (index out of range, invalid bigrade, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace gerst
