#pragma once

#include <stdexcept>
#include <string>

namespace conekit {

// Every failure the library can raise. The CLI maps ValidationError and
// DomainError to exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class NearIntegerOrder : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class SingularityError : public DomainError {
public:
    using DomainError::DomainError;
};

class RegionError : public DomainError {
public:
    using DomainError::DomainError;
};

class CalibrationError : public Error {
public:
    using Error::Error;
};

} // namespace conekit
