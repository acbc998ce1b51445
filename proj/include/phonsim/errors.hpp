#pragma once

#include <stdexcept>
#include <string>

namespace phonsim {

// Invalid physical argument (negative frequency, Gamma <= 0, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Operation requested for a dimensionality it is not defined for
// (e.g. Franck-Condon weight with a 2D phonon dispersion).
class DimensionalityError : public DomainError {
public:
    explicit DimensionalityError(const std::string& what) : DomainError(what) {}
};

// Missing or inconsistent configuration (absent density, masses, window...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that fails validation (NaN counts, duplicates...).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: quadrature non-convergence, window too short,
// non-Hermitian drift past tolerance, ...
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeding hard resource limits (brute-force path sum too large).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace phonsim
