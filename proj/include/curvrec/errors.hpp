#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvrec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed curvature spec text. `offset` is the byte offset of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A curve whose parametrization is not regular enough for the requested operation.
class RegularityError : public Error {
public:
    RegularityError(const std::string& what, double parameter)
        : Error(what + " at parameter " + std::to_string(parameter)), parameter_(parameter) {}

    [[nodiscard]] double parameter() const noexcept { return parameter_; }

private:
    double parameter_;
};

/// A numerical procedure could not meet its requested tolerance.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double best_bound)
        : Error(what), best_bound_(best_bound) {}

    [[nodiscard]] double best_bound() const noexcept { return best_bound_; }

private:
    double best_bound_;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed CSV content; `line` is 1-based (the header is line 1).
class CsvError : public IoError {
public:
    CsvError(const std::string& path, std::size_t line, const std::string& what)
        : IoError(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace curvrec
