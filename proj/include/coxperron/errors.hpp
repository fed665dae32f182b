#pragma once

#include <stdexcept>
#include <string>

#include "coxperron/rational.hpp"

namespace coxperron {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called with arguments violating its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A Sturm query endpoint is itself a root; the caller has to perturb it.
class EndpointRootError : public PreconditionError {
public:
    explicit EndpointRootError(const Rational& point)
        : PreconditionError("endpoint " + point.get_str() +
                            " is a root of the polynomial; choose a perturbed endpoint"),
          point_(point) {}

    const Rational& point() const noexcept { return point_; }

private:
    Rational point_;
};

/// Internal consistency check failed (construction bug, not bad input).
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace coxperron
