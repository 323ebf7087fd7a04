#ifndef LERCHKIT_ERRORS_HPP
#define LERCHKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lerchkit {

// Base class for all structured evaluation errors. Operations never return
// infinities or NaNs to signal trouble; they throw one of the types below so
// callers can tell "identity fails" apart from "evaluated at a pole".
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// The requested point is a pole of the function (e.g. digamma at -3,
// Hurwitz zeta at s = 1, csc(t) at t in pi*Z).
class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Parameters fall outside every supported evaluation regime or violate a
// convergence condition.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// An iterative scheme (series, quadrature refinement, extrapolation) did not
// reach the requested tolerance within its budget.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// An integrand produced a non-finite value at an interior node.
class SingularityError : public Error {
public:
    explicit SingularityError(const std::string& msg) : Error(msg) {}
};

} // namespace lerchkit

#endif // LERCHKIT_ERRORS_HPP
