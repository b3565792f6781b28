#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpsep {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A value or matrix failed a domain check (bad parameter, invalid state,
// mismatched dimensions). CLI maps these to exit code 3.
class ValidationError : public Error {
public:
    using Error::Error;
};

class NotFinite : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotHermitian : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotPowerOfTwoDim : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class TraceNotOne : public ValidationError {
public:
    TraceNotOne(const std::string& msg, double actual_trace)
        : ValidationError(msg), actual_trace_(actual_trace) {}
    double actual_trace() const { return actual_trace_; }

private:
    double actual_trace_;
};

class NotPositive : public ValidationError {
public:
    NotPositive(const std::string& msg, double min_eigenvalue)
        : ValidationError(msg), min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

class NotNormalized : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class XOutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NTooSmall : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NOutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotAPermutation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DimensionMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class WeightsInvalid : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnsupportedLayout : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class CountMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Partition string rejected before any index semantics apply.
// CLI maps these to exit code 2 (usage).
class PartitionSyntaxError : public Error {
public:
    using Error::Error;
};

class BadSyntax : public PartitionSyntaxError {
public:
    using PartitionSyntaxError::PartitionSyntaxError;
};

class EmptySide : public PartitionSyntaxError {
public:
    using PartitionSyntaxError::PartitionSyntaxError;
};

// Partition string parsed but does not describe a bipartition of 1..n.
class IndexOutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class Overlap : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class Incomplete : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Malformed input file. Position is 1-based. CLI exit code 4.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace qpsep
