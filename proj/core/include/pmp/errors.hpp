#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmp {

/// Base of every exception thrown by the library. Each failure mode has its
/// own subclass so callers (and the CLI's exit-code mapping) can tell them
/// apart without parsing messages.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument: point outside the domain, order out of range, bad size.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Kernel evaluated with target and source closer than the coincidence epsilon.
class CoincidentPoints : public Error {
public:
    using Error::Error;
};

class ResolutionTooLow : public Error {
public:
    using Error::Error;
};

/// An integrand produced NaN or Inf at a quadrature node.
class NonFiniteSample : public Error {
public:
    using Error::Error;
};

/// Polydisc operator requested with more factors than the desk-scale cap.
class DimensionCap : public Error {
public:
    using Error::Error;
};

/// Nested operator program longer than the oracle supports.
class DepthCap : public Error {
public:
    using Error::Error;
};

class NonRealRHS : public Error {
public:
    using Error::Error;
};

/// A finite-difference stencil would sample outside the closed disk.
class StencilOutOfDomain : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnknownVariable : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace pmp
