#pragma once

#include <stdexcept>
#include <string>

namespace escgraph {

// Error taxonomy mirrored by the CLI exit codes:
//   ArgumentError / DomainError -> 1 (usage, unsupported operation)
//   ParseError / ValidationError -> 2 (malformed or inconsistent input)
//   ResourceError -> 3 (work budget exhausted)
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArgumentError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct ResourceError : Error {
    using Error::Error;
};

} // namespace escgraph
