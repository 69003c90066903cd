#pragma once

#include <stdexcept>
#include <string>

namespace darboux {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Violated precondition: the caller asked for something the object cannot do.
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Rejected expression source. `position` is a 0-based offset into the text.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// A diagonal limit could not be resolved to the requested accuracy.
struct LimitError : std::runtime_error {
    double fit_residual;
    LimitError(double resid, const std::string& msg)
        : std::runtime_error(msg), fit_residual(resid) {}
};

// Failure inside a solver (singular system, NaN in a march, ...).
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace darboux
