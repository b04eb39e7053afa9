#pragma once

#include <stdexcept>
#include <string>

namespace lgamble {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// logit evaluated at 0 or 1, or a fair price of 0 or 1 that would imply an
// infinite ambiguity premium.
class InfiniteLogitError : public DomainError {
public:
    using DomainError::DomainError;
};

// A prospect list that cannot form a gamble (empty, or max likelihood != 1).
class InvalidGambleError : public Error {
public:
    using Error::Error;
};

// A model whose probabilities or payoffs are malformed.
class InvalidModelError : public Error {
public:
    using Error::Error;
};

// Evidence with probability zero under every model.
class DegenerateEvidenceError : public Error {
public:
    using Error::Error;
};

// Malformed JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

// A file could not be read.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace lgamble
