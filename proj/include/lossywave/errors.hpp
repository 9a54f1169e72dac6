#pragma once

#include <stdexcept>
#include <string>

namespace lossywave {

struct InvalidParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested quantity needs lambda + 2 mu > 0 (finite cutoff wavenumber).
struct LosslessMediumError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Phase quantities are undefined at and above the cutoff wavenumber.
struct DiffusiveRegimeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ZeroWavenumberError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A grid was asked to step without a stability certificate attached.
struct MissingCertificateError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Non-finite samples appeared during time stepping.
struct DivergedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Stability gate failure; carries the certificate numbers for diagnostics.
struct UnstableSchemeError : std::runtime_error {
    UnstableSchemeError(const std::string& what, double max_gain_, double worst_theta_)
        : std::runtime_error(what), max_gain(max_gain_), worst_theta(worst_theta_) {}
    double max_gain;
    double worst_theta;
};

}  // namespace lossywave
