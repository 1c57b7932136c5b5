#pragma once

#include <stdexcept>
#include <string>

namespace hoi {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter left the model's domain, or the likelihood became non-finite.
struct DomainError : Error {
    using Error::Error;
};

// An information matrix (or block) required to be invertible is singular.
struct SingularInfoError : Error {
    using Error::Error;
};

// Correction term invalid (e.g. r and q of opposite sign, u <= 0).
struct InvalidCorrectionError : Error {
    using Error::Error;
};

// Requested variant lacks the evaluators it needs.
struct UnsupportedVariantError : Error {
    using Error::Error;
};

// |r| below the singular threshold: the caller must bridge by interpolation.
struct SingularZoneError : Error {
    using Error::Error;
};

// Problem size exceeds a hard enumeration/evaluation budget.
struct BudgetError : Error {
    using Error::Error;
};

// Input validation failures (CSV, config, flags).
struct ValidationError : Error {
    using Error::Error;
};

} // namespace hoi
