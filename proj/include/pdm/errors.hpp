#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdm {

// A requested bound state does not exist for the given potential parameters
// (Morse: sqrt(D)/eps - n - 1/2 must stay positive).
class BoundStateCountExceeded : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Quantum number outside the admissible range of the model.
class StateOutOfRange : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The Samsonov model has no n_z = 2 level.
class MissingState : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Grid does not span the domain the model requires.
class DomainMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Eigensolver hit its sweep cap; carries whatever converged before the stall.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, std::vector<std::complex<double>> partial)
        : std::runtime_error(what), partial_spectrum(std::move(partial)) {}

    std::vector<std::complex<double>> partial_spectrum;
};

} // namespace pdm
