#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pdmosc {

/// Argument outside the admissible parameter domain (a <= -1, alpha <= -1, x <= 0 for ln_gamma, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation requested exactly at a point where the quantity is singular (x = 0 for a < 0).
class SingularPointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iterative refinement ran out of budget. Carries the best estimate reached.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<double> best, std::vector<double> error)
        : std::runtime_error(what), best_estimate(std::move(best)), error_estimate(std::move(error)) {}

    std::vector<double> best_estimate;
    std::vector<double> error_estimate;
};

}  // namespace pdmosc
