#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace logdet {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Construction / input validation -------------------------------------------

class AsymmetricInputError : public Error {
  public:
    using Error::Error;
};

class MissingDiagonalError : public Error {
  public:
    using Error::Error;
};

class NonPositiveDiagonalError : public Error {
  public:
    using Error::Error;
};

class DuplicateEntryError : public Error {
  public:
    using Error::Error;
};

class IndexOutOfRangeError : public Error {
  public:
    using Error::Error;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

class OverflowError : public Error {
  public:
    using Error::Error;
};

// Numerical ------------------------------------------------------------------

// A factorization pivot came out nonpositive or non-finite. When raised from
// the estimator, `row` identifies the matrix row whose subproblem failed.
class NotPositiveDefiniteError : public Error {
  public:
    explicit NotPositiveDefiniteError(const std::string& what,
                                      std::optional<std::size_t> row = std::nullopt)
        : Error(what), row_(row) {}

    std::optional<std::size_t> row() const { return row_; }

  private:
    std::optional<std::size_t> row_;
};

// Spline ----------------------------------------------------------------------

class NeedTwoPointsError : public Error {
  public:
    using Error::Error;
};

class SaturatedPatternError : public Error {
  public:
    using Error::Error;
};

class ZeroNormColumnError : public Error {
  public:
    using Error::Error;
};

class NonIncreasingCoordinatesError : public Error {
  public:
    using Error::Error;
};

// Oracle / resources -----------------------------------------------------------

class TooLargeForOracleError : public Error {
  public:
    using Error::Error;
};

// I/O ---------------------------------------------------------------------------

// Malformed input; `line` is the 1-based line number when known.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what, std::optional<std::size_t> line = std::nullopt)
        : Error(line ? what + " (line " + std::to_string(*line) + ")" : what), line_(line) {}

    std::optional<std::size_t> line() const { return line_; }

  private:
    std::optional<std::size_t> line_;
};

class UnsupportedFormatError : public Error {
  public:
    using Error::Error;
};

class SinkError : public Error {
  public:
    using Error::Error;
};

}  // namespace logdet
