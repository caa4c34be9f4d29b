#pragma once

#include <stdexcept>
#include <string>

namespace wcss {

// Bad user-supplied values: negative powers, empty scenarios, K < M, ...
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Config text that cannot be parsed; carries key and line context in the message.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A series or iteration hit its cap before reaching the requested tolerance.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

// Scale parameters too close together for the closed-form CDFs, even after
// the documented perturbation.
class degeneracy_error : public std::runtime_error {
public:
    explicit degeneracy_error(const std::string& what) : std::runtime_error(what) {}
};

// Floating-point breakdown (non-finite intermediate, hopeless cancellation, ...).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Root bracketing for threshold inversion failed.
class bracket_error : public std::runtime_error {
public:
    explicit bracket_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wcss
