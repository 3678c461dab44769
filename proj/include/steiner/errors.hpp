#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A body description is malformed: non-positive radius or semi-axis,
/// dimension outside [2,6], mismatched dimensions in a sum, empty sum.
class InvalidBodyError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its contract, e.g. evaluating the
/// support function of an inner-parallel descriptor whose summand
/// condition was never certified, or asking for a planar chain in n != 2.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The summand condition rho_max(L) <= rho_min(K) failed; carries the
/// (negative) margin so callers can report how badly it failed.
class SummandViolationError : public Error {
public:
    SummandViolationError(const std::string& what, double margin)
        : Error(what), margin_(margin) {}
    double margin() const { return margin_; }

private:
    double margin_;
};

/// Numerical machinery failed to deliver: eigen iteration stalled,
/// refinement did not converge, LP infeasible where it cannot be, a
/// quadrature integrand threw.
class NumericError : public Error {
public:
    using Error::Error;
};

/// A body file or JSON document does not match the input schema.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace steiner
