#pragma once

#include <stdexcept>
#include <string>

namespace stern {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A theorem or operation hypothesis does not hold for the given inputs.
/// Sweeps count these as skips, never as failed congruences.
class DomainError : public Error {
public:
    using Error::Error;
};

/// k and the character do not have opposite parity.
class ParityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The normalised value script-L is not defined for this (p, m).
class UndefinedCaseError : public DomainError {
public:
    using DomainError::DomainError;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

class NotRootOfUnityError : public Error {
public:
    using Error::Error;
};

/// A precomputed table would exceed its configured size bound.
class ResourceError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class CacheError : public Error {
public:
    using Error::Error;
};

}  // namespace stern
