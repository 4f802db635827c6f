#pragma once

#include <stdexcept>
#include <string>

namespace qchar {

// Base class for everything thrown by this library, so callers can
// distinguish our failures from genuine std exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownType : Error {
    using Error::Error;
};

struct RankOutOfRange : Error {
    using Error::Error;
};

struct ArgumentOutOfRange : Error {
    using Error::Error;
};

// Two operands built against different spectral parameter orders.
struct SpecMismatch : Error {
    using Error::Error;
};

struct NotIDominant : Error {
    using Error::Error;
};

// Operation defined only for a generic spectral parameter.
struct RootOfUnityUnsupported : Error {
    using Error::Error;
};

// The requested top weight does not generate a special character:
// some coefficient is not determined by dominance alone.
struct NotSpecial : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

// Fixed-point data failed a cross-check that must hold if the inputs
// were produced by this library (e.g. two nodes disagree on a coefficient).
struct InternalInconsistency : Error {
    using Error::Error;
};

struct AntisymmetryViolation : Error {
    using Error::Error;
};

struct CorruptEntry : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace qchar
