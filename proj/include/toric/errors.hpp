#pragma once

#include <stdexcept>
#include <string>

namespace toric {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text or JSON that does not match the documented formats.
struct ParseError : Error {
    using Error::Error;
};

// A rational modulus has a factor above the trial-division bound.
struct FactorBoundExceeded : Error {
    using Error::Error;
};

struct NonSquare : Error {
    using Error::Error;
};

struct SingularMinor : Error {
    using Error::Error;
};

struct NotUnimodular : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct RankDeficient : Error {
    using Error::Error;
};

struct TooManyEquations : Error {
    using Error::Error;
};

struct EmptyArrangement : Error {
    using Error::Error;
};

struct ZeroCoordinate : Error {
    using Error::Error;
};

struct DegenerateEquation : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct BadIndex : Error {
    using Error::Error;
};

}  // namespace toric
