#pragma once

#include <stdexcept>
#include <string>

namespace simwave {

/// Base class for runtime numerical failures (as opposed to usage errors,
/// which are reported via std::invalid_argument / std::domain_error).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A linear system was singular or near-singular (condition estimate above
/// threshold), typically because a spectral parameter sits at or near an
/// eigenvalue of the pencil.
class near_singular_error : public numerical_error {
public:
    near_singular_error(const std::string& msg, double condition_estimate)
        : numerical_error(msg), condition(condition_estimate) {}
    double condition;
};

/// A series or iteration failed to converge within its budget.
class no_convergence_error : public numerical_error {
public:
    explicit no_convergence_error(const std::string& msg) : numerical_error(msg) {}
};

/// Evaluation requested at a degenerate parameter point (logarithmic
/// hypergeometric case, Gamma pole, ...) where the implemented formula
/// does not apply.
class degenerate_case_error : public numerical_error {
public:
    explicit degenerate_case_error(const std::string& msg) : numerical_error(msg) {}
};

} // namespace simwave
