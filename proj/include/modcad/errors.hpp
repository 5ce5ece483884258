#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace modcad {

// Base of every error the kernel throws. Callers that only need a message
// catch this; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GeometryError : public Error {
public:
    using Error::Error;
};

class SchemaViolation : public Error {
public:
    SchemaViolation(std::string key, std::string reason)
        : Error("schema violation at '" + key + "': " + reason),
          key_(std::move(key)),
          reason_(std::move(reason)) {}

    const std::string& key() const noexcept { return key_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string key_;
    std::string reason_;
};

class GenerationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"
                     : what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Stored geometry of a module disagrees with what its parameters generate.
class IntegrityMismatch : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

} // namespace modcad
