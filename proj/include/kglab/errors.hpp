#pragma once

#include <stdexcept>
#include <string>

namespace kg {

// Contract violations: caller handed us something malformed (bad grid, shape
// mismatch, invalid config). Maps to CLI exit code 2.
struct ContractViolation : std::invalid_argument {
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical failures: the computation itself broke down (blow-up, quadrature
// refusing to converge, indefinite energy form). Maps to CLI exit code 3.
struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

// A certification sweep observed a violated bound. Maps to CLI exit code 4.
struct CertificationFailure : std::runtime_error {
    explicit CertificationFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kg
