#pragma once

#include <stdexcept>
#include <string>

namespace trinomax {

/// Input violates a documented precondition (distinct frequencies, positive
/// moduli, coprime arguments, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// The derivative of the squared modulus does not change sign on the
/// localisation interval as it must for a normalised reduced form.
class BracketFailure : public std::runtime_error {
public:
    explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Two-point reconstruction: the data are not the values of a trinomial that
/// attains its maximum modulus at both points.
class NoSolution : public std::runtime_error {
public:
    explicit NoSolution(const std::string& what) : std::runtime_error(what) {}
};

/// Two-point reconstruction: sin(theta + kx) sin(theta - lx) vanishes.
class SingularConfiguration : public std::runtime_error {
public:
    explicit SingularConfiguration(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trinomax
