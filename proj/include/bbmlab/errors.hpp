#pragma once

#include <stdexcept>
#include <string>

namespace bbmlab {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Grid construction rejected (odd/too-small sample count, non-positive length).
class InvalidGrid : public Error {
public:
    using Error::Error;
};

/// Two fields that must live on the same grid do not.
class GridMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// The x-antiderivative (or a norm built on it) was requested for data whose
/// per-slice x-mean is not zero; the 1/(i xi) symbol is undefined there.
/// y_index is the offending slice (-1 for 1D fields).
class NonZeroXMean : public Error {
public:
    NonZeroXMean(int y_index_, double mean_)
        : Error("nonzero x-mean " + std::to_string(mean_) + " at y index " +
                std::to_string(y_index_)),
          y_index(y_index_),
          mean(mean_) {}
    int y_index;
    double mean;
};

/// A state exceeded the magnitude guard or became non-finite during stepping.
class BlowUp : public Error {
public:
    BlowUp(double t_, double magnitude_)
        : Error("state magnitude " + std::to_string(magnitude_) + " at t = " +
                std::to_string(t_)),
          t(t_),
          magnitude(magnitude_) {}
    double t;
    double magnitude;
};

/// dt violates the explicit-stepping stability budget for the linear symbol.
class StepTooLarge : public Error {
public:
    StepTooLarge(double dt_, double max_symbol_)
        : Error("dt = " + std::to_string(dt_) + " exceeds stability budget: dt * " +
                std::to_string(max_symbol_) + " > 2.5"),
          dt(dt_),
          max_symbol(max_symbol_) {}
    double dt;
    double max_symbol;
};

/// Snapshot times of trajectories fed to a joint analysis do not coincide.
class TimeMisalignment : public Error {
public:
    using Error::Error;
};

class NegativeInput : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

/// A profile cannot be represented on the requested grid (too few points per width).
class UnresolvedProfile : public Error {
public:
    using Error::Error;
};

/// Scenario file is not syntactically valid JSON / not the expected shape.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Scenario parsed but violates an invariant; `field` is the offending path.
class ValidationError : public Error {
public:
    ValidationError(std::string field_, const std::string& what_)
        : Error(field_ + ": " + what_), field(std::move(field_)) {}
    std::string field;
};

}  // namespace bbmlab
