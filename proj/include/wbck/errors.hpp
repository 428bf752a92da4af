#pragma once

#include <stdexcept>
#include <string>

namespace wbck {

// Base class for all workbench errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An element index outside the carrier.
struct IndexError : Error {
    using Error::Error;
};

// The reflexive-transitive closure of a generator set contains a 2-cycle
// between distinct elements.
struct AntisymmetryError : Error {
    using Error::Error;
};

// An operation was called outside its stated domain (e.g. perp(u,x,y) with
// u or x outside the section [y)).
struct PreconditionError : Error {
    using Error::Error;
};

// A size bound of the enumeration machinery was exceeded.
struct BoundError : Error {
    using Error::Error;
};

// A check needs an operation table the algebra does not carry.
struct MissingOperationError : Error {
    using Error::Error;
};

struct NotSectionallyPcError : Error {
    using Error::Error;
};

struct NotMeetSemilatticeError : Error {
    using Error::Error;
};

struct NotJoinSemilatticeError : Error {
    using Error::Error;
};

struct AdjunctionRequiredError : Error {
    using Error::Error;
};

struct NotIdempotentPocrigError : Error {
    using Error::Error;
};

struct WrongVariantError : Error {
    using Error::Error;
};

// A meet or join needed during term evaluation does not exist.
struct PartialOperationUndefinedError : Error {
    using Error::Error;
};

// Parse failure; positions are 1-based. `line` is 0 for single-line inputs
// such as law strings.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg), line(line_), column(column_) {}
};

struct UnknownNameError : ParseError {
    using ParseError::ParseError;
};

struct BadTableShapeError : ParseError {
    using ParseError::ParseError;
};

}  // namespace wbck
