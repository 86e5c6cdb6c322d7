#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starmoments {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidCharacter : public Error {
public:
    /// `position` is 1-based.
    InvalidCharacter(std::size_t position, char c)
      : Error("invalid character '" + std::string(1, c) + "' at position " +
              std::to_string(position)),
        position_(position)
    {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class InvalidPartition : public Error {
public:
    using Error::Error;
};

class NotPairPartition : public Error {
public:
    using Error::Error;
};

class NotAlternating : public Error {
public:
    using Error::Error;
};

class NotAClosedPath : public Error {
public:
    using Error::Error;
};

class PairNotBad : public Error {
public:
    using Error::Error;
};

class GroundSizeMismatch : public Error {
public:
    using Error::Error;
};

class NormalizationFailure : public Error {
public:
    using Error::Error;
};

class NotRegular : public Error {
public:
    using Error::Error;
};

class AttemptsExhausted : public Error {
public:
    using Error::Error;
};

class InfeasibleParameters : public Error {
public:
    using Error::Error;
};

class GraphFormatError : public Error {
public:
    using Error::Error;
};

class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace starmoments
