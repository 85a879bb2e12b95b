#pragma once

#include <stdexcept>
#include <string>

namespace planedraw {

// Base for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input violates a structural rule of the data model (asymmetric adjacency,
// loops, parallel edges, disconnected graph, non-planar rotation system).
class StructuralError : public Error {
public:
    using Error::Error;
};

// A caller-supplied argument is malformed (unknown vertex, missing
// coordinates, non-edge passed where an edge is required).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// The graph is too small for the requested operation.
class SizeError : public Error {
public:
    using Error::Error;
};

// The graph is in the wrong state for the operation (e.g. an operation that
// requires a triangulation was called on a graph with larger faces).
class StateError : public Error {
public:
    using Error::Error;
};

// An operation precondition documented in the header was violated.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Geometric degeneracy in the input drawing (e.g. two edges leaving a vertex
// in the exact same direction where a separating line is required).
class DegeneracyError : public Error {
public:
    using Error::Error;
};

// A text document failed to parse. Carries a 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An internal invariant failed. Reaching this is a bug in the library, not a
// problem with the input; the message carries diagnostics.
class KernelError : public Error {
public:
    using Error::Error;
};

}  // namespace planedraw
