#pragma once

#include <stdexcept>
#include <string>

namespace quanputer {

// Base of every failure the library raises on purpose. Catching this at the
// CLI boundary separates domain/numeric failures from programming errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Singular Jacobian where a regular one is required: the system is not
// time-reversible at this point.
struct Irregular : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct InconsistentJacobian : Error {
    using Error::Error;
};

struct ZeroState : Error {
    using Error::Error;
};

struct RepresentationMismatch : Error {
    using Error::Error;
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct MemoryCapExceeded : Error {
    using Error::Error;
};

struct AncillaNotUncomputed : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct NotHermitian : Error {
    using Error::Error;
};

struct InvalidA : Error {
    using Error::Error;
};

struct Singular : Error {
    using Error::Error;
};

struct GridMismatch : Error {
    using Error::Error;
};

struct SafetyBoxExit : Error {
    using Error::Error;
};

struct InvalidValue : Error {
    using Error::Error;
};

// Configuration problems carry enough context to point at the offending
// file location or key.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg, int line = 0)
        : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg), line_number(line) {}
    int line_number = 0;
};

}  // namespace quanputer
