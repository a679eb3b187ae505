#pragma once

#include <stdexcept>
#include <string>

namespace sgmean {

/// Raised when an iterative routine fails to converge or a computation
/// produced non-finite values. The message carries a digest of the input.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a spectral function is evaluated outside its domain,
/// e.g. a fractional power of a matrix with a non-positive eigenvalue.
class DomainError : public std::domain_error {
public:
    DomainError(const std::string& what, double lambda_min)
        : std::domain_error(what), lambda_min_(lambda_min) {}

    /// Smallest eigenvalue of the offending input.
    double lambda_min() const noexcept { return lambda_min_; }

private:
    double lambda_min_;
};

} // namespace sgmean
