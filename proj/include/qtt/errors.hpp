#pragma once

#include <stdexcept>
#include <string>

namespace qtt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration / input errors (CLI exit code 2).
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

// Model-regime errors: inputs outside the approximations the model is built on.
struct SingularMatrix : Error { using Error::Error; };
struct RegimeViolation : Error { using Error::Error; };
struct ResonanceViolation : Error { using Error::Error; };
struct FrequencyCollision : Error { using Error::Error; };
struct WeakCouplingViolation : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// Numerical / internal-consistency errors (CLI exit code 3).
struct TemplateMismatch : Error { using Error::Error; };
struct DegenerateKernel : Error { using Error::Error; };
struct NegativePopulation : Error { using Error::Error; };
struct IntegrationFailure : Error { using Error::Error; };
struct DefinitionMismatch : Error { using Error::Error; };
struct FlatModulator : Error { using Error::Error; };
struct EmptyTable : Error { using Error::Error; };

}  // namespace qtt
