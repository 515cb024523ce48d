#pragma once

#include <stdexcept>
#include <string>

namespace rrb {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimensions or arities of the inputs do not fit together.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// An operation was called on data that violates its documented precondition,
/// e.g. extending by a cochain that is not a cocycle.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A structural invariant that the library itself should guarantee was found
/// broken. Seeing one of these means a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (rationals, structure files).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace rrb
