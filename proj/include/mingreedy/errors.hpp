#pragma once

#include <stdexcept>
#include <string>

namespace mingreedy {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A vertex label is out of range or refers to a deleted vertex.
struct InvalidVertexError : Error {
    using Error::Error;
};

/// An operation that needs at least one present vertex was given an empty graph.
struct EmptyGraphError : Error {
    using Error::Error;
};

/// An elimination ordering is not a permutation of the present vertices.
struct InvalidOrderingError : Error {
    using Error::Error;
};

/// The input graph is outside the graph class an operation requires
/// (e.g. a non-chordal graph passed to a chordal-only solver).
struct ClassViolationError : Error {
    using Error::Error;
};

/// The instance exceeds a configured size limit for an exhaustive routine.
struct SizeLimitError : Error {
    using Error::Error;
};

/// Malformed or inconsistent input (bad trace, dependent reference set, ...).
struct InvalidInputError : Error {
    using Error::Error;
};

/// An interval with lo > hi or an otherwise malformed representation.
struct InvalidIntervalError : Error {
    using Error::Error;
};

/// A family generator was called with a parameter outside its domain.
struct InvalidParameterError : Error {
    using Error::Error;
};

} // namespace mingreedy
