#pragma once

#include <stdexcept>
#include <string>

namespace amat {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class WrongField : public Error {
public:
    using Error::Error;
};

// Complex input does not satisfy the quaternionic block structure.
class StructureViolation : public Error {
public:
    using Error::Error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

class NotAProjection : public Error {
public:
    using Error::Error;
};

class Singular : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

// Eigenvalue sits too close to 0/1 for the subspace bookkeeping to be trusted.
class AngleClassificationAmbiguous : public Error {
public:
    using Error::Error;
};

class PrecondViolated : public Error {
public:
    using Error::Error;
};

class SpectralGapTooSmall : public Error {
public:
    using Error::Error;
};

class DeltaTooLarge : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidSpec : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    int line_number;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace amat
