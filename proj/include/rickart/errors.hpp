#pragma once

#include <stdexcept>
#include <string>

namespace rickart {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct SingularCore : Error {
    using Error::Error;
};
struct SingularGram : Error {
    using Error::Error;
};
struct NotIdempotent : Error {
    using Error::Error;
};
struct NotSelfAdjoint : Error {
    using Error::Error;
};
struct NotEnumerable : Error {
    using Error::Error;
};
struct NotDecidable : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
// Raised when two provably equivalent evaluation routes disagree.
struct InternalDisagreement : Error {
    using Error::Error;
};
struct UnknownSuite : Error {
    using Error::Error;
};

} // namespace rickart
