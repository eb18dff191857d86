#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lensgraph {

/// Base of every error raised by the library. `code()` is the stable,
/// machine-readable name surfaced by the CLI's JSON error objects.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* code() const noexcept { return "Error"; }
};

#define LENSGRAPH_ERROR(Name)                                      \
    class Name : public Error {                                     \
    public:                                                         \
        using Error::Error;                                         \
        const char* code() const noexcept override { return #Name; } \
    }

LENSGRAPH_ERROR(DomainError);
LENSGRAPH_ERROR(SchemaError);
LENSGRAPH_ERROR(InvalidDrawing);
LENSGRAPH_ERROR(NonSimplePolygon);
LENSGRAPH_ERROR(CrossingParallelPair);
LENSGRAPH_ERROR(TooLarge);
LENSGRAPH_ERROR(TooSmall);
LENSGRAPH_ERROR(NotSeparated);
LENSGRAPH_ERROR(NotSingleCrossing);
LENSGRAPH_ERROR(DegreeTooHigh);
LENSGRAPH_ERROR(DegenerateDiscretization);
LENSGRAPH_ERROR(GenerationExhausted);

#undef LENSGRAPH_ERROR

/// Malformed input text. `line` is 1-based (0 when unknown); `field` is a
/// JSON-path-like locator such as `edges[2].arc[0][1]`.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::string field = {})
        : Error(what), line_(line), field_(std::move(field)) {}
    const char* code() const noexcept override { return "ParseError"; }
    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

} // namespace lensgraph
