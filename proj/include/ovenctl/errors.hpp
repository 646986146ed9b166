#pragma once

#include <stdexcept>
#include <string>

namespace ovenctl {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// A pivot fell below the singularity threshold during elimination.
class SingularMatrix : public Error {
   public:
    using Error::Error;
};

// The QR iteration failed to deflate an eigenvalue within the sweep budget.
class NoConvergence : public Error {
   public:
    using Error::Error;
};

// A non-real root has no conjugate partner.
class UnpairedComplexRoot : public Error {
   public:
    using Error::Error;
};

// Characteristic length (or other geometry) is non-positive.
class InvalidGeometry : public Error {
   public:
    using Error::Error;
};

// Inputs fall outside the validity domain of an empirical correlation.
class CorrelationDomain : public Error {
   public:
    using Error::Error;
};

class UnknownPreset : public Error {
   public:
    using Error::Error;
};

// A body with non-positive thermal mass (mass * cp <= 0).
class DegenerateBody : public Error {
   public:
    using Error::Error;
};

class Uncontrollable : public Error {
   public:
    using Error::Error;
};

class Unobservable : public Error {
   public:
    using Error::Error;
};

// The controllability matrix solve is too inaccurate for a trustworthy gain.
class IllConditioned : public Error {
   public:
    using Error::Error;
};

// The closed-loop DC gain is numerically zero; no feedforward scaling exists.
class SingularDcGain : public Error {
   public:
    using Error::Error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

}  // namespace ovenctl
