#pragma once

#include <stdexcept>
#include <string>

namespace smspk {

// Base class for everything this library throws deliberately.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters or configuration (CLI exit code 1).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Unreadable or malformed input data (CLI exit code 2).
class DataError : public Error {
public:
    using Error::Error;
};

// Malformed text input; carries the offending line number (1-based, 0 = n/a).
class ParseError : public DataError {
public:
    ParseError(const std::string& message, int line)
        : DataError(line > 0 ? message + " (line " + std::to_string(line) + ")"
                             : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// Pathway reduced to zero genes by preprocessing; callers usually skip it.
class EmptyPathwayError : public DataError {
public:
    using DataError::DataError;
};

// Iterative solver hit its iteration cap; carries the last residual.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& message, double residual)
        : Error(message + " (last residual " + std::to_string(residual) + ")"),
          residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

// Every pathway failed the survival screen (CLI exit code 3).
class NoPathwayPassedError : public Error {
public:
    using Error::Error;
};

}  // namespace smspk
