// SPDX-License-Identifier: Apache-2.0
//
// dude: downlink/uplink decoupling analysis for LTE heterogeneous networks
// ------------------------------------------------------------------------

#ifndef DUDE_ERRORS_HPP
#define DUDE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dude {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A mathematical argument outside the model's domain (non-positive distance, zero denominator).
class DomainError : public Error
{
  public:
    using Error::Error;
};

/// Interference zone smaller than the path-loss model's 1 m reference distance.
class DegenerateZoneError : public DomainError
{
  public:
    using DomainError::DomainError;
};

/// A caller-side precondition does not hold (e.g. device not in the decoupling region).
class PreconditionError : public Error
{
  public:
    using Error::Error;
};

class OutOfCoverageError : public PreconditionError
{
  public:
    using PreconditionError::PreconditionError;
};

/// A modelling assumption is violated by the input (e.g. overlapping interference zones).
class AssumptionViolation : public Error
{
  public:
    using Error::Error;
};

/// A configuration value breaks a type invariant.
class ValidationError : public Error
{
  public:
    using Error::Error;
};

/// Malformed configuration text. `line()` is 1-based, 0 when not tied to a line.
class ConfigError : public ValidationError
{
  public:
    ConfigError(std::size_t line, const std::string& what)
        : ValidationError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line), detail_(what)
    {}

    std::size_t line() const noexcept { return line_; }
    /// Message without the line prefix.
    const std::string& detail() const noexcept { return detail_; }

  private:
    std::size_t line_;
    std::string detail_;
};

/// A campaign's embedded post-condition failed; results are not emitted.
class AssertionFailure : public Error
{
  public:
    using Error::Error;
};

class IoError : public Error
{
  public:
    using Error::Error;
};

}  // namespace dude

#endif  // DUDE_ERRORS_HPP
