#pragma once

#include <stdexcept>
#include <string>

namespace divcor {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateShift : Error { using Error::Error; };
struct InvalidArity : Error { using Error::Error; };
struct RingMismatch : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct TailBoundViolation : Error { using Error::Error; };
struct ExponentFloorBreach : Error { using Error::Error; };
struct OutOfSieveRange : Error { using Error::Error; };
struct DivergentSeries : Error { using Error::Error; };
struct PoleProximity : Error { using Error::Error; };
struct QuadratureNonConvergence : Error { using Error::Error; };
struct SearchSpaceTooLarge : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

} // namespace divcor
