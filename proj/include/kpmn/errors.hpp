#ifndef KPMN_ERRORS_HPP
#define KPMN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kpmn {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Equation parameter a or b is zero.
class ZeroCoefficient : public Error {
public:
    explicit ZeroCoefficient(const std::string& what) : Error(what) {}
};

// Nonlinearity power m or n is not positive.
class NonPositivePower : public Error {
public:
    explicit NonPositivePower(const std::string& what) : Error(what) {}
};

// Wave vector length does not match the spatial dimension, or s=0 with N>1.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Argument outside the mathematical domain of a special function.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A family-specific validity predicate failed; the message names it.
class ValidityError : public Error {
public:
    explicit ValidityError(const std::string& what) : Error(what) {}
};

// A negative base met an even-denominator rational exponent.
class ParityError : public Error {
public:
    explicit ParityError(const std::string& what) : Error(what) {}
};

// The potential has no positive root in the searched range.
class NoRoot : public Error {
public:
    explicit NoRoot(const std::string& what) : Error(what) {}
};

// The half-width integral diverges at the V=0 endpoint.
class DivergentIntegral : public Error {
public:
    explicit DivergentIntegral(const std::string& what) : Error(what) {}
};

// The solitary-wave potential has no turning point (sgn A != sgn B).
class NoTurningPoint : public Error {
public:
    explicit NoTurningPoint(const std::string& what) : Error(what) {}
};

// Operation requires a compact profile but L is infinite.
class NonCompact : public Error {
public:
    explicit NonCompact(const std::string& what) : Error(what) {}
};

// Conservation law not admitted for the given parameters.
class LawNotApplicable : public Error {
public:
    explicit LawNotApplicable(const std::string& what) : Error(what) {}
};

// Degenerate constant configuration (A=0) in the quadrature case analysis.
class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& what) : Error(what) {}
};

} // namespace kpmn

#endif
