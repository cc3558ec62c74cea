#pragma once

#include <stdexcept>
#include <string>

namespace mop {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Attempt to step a multi-index below the lattice (entry already 0).
class BelowLattice : public Error { public: using Error::Error; };

/// Matrix/vector shapes do not match the operation.
class DimensionMismatch : public Error { public: using Error::Error; };

/// Exact linear system has no unique solution.
class SingularMatrix : public Error { public: using Error::Error; };

/// Division by an exactly-zero rational.
class DivisionByZero : public Error { public: using Error::Error; };

/// The mixed moment matrix of a multi-index is singular.
class NonNormalIndex : public Error { public: using Error::Error; };

/// Family parameters violate a documented constraint.
class InvalidParameters : public Error { public: using Error::Error; };

/// A moment of higher degree than the table holds was requested.
class InsufficientDepth : public Error { public: using Error::Error; };

/// Malformed input file or rational literal.
class ParseError : public Error { public: using Error::Error; };

/// Custom moment rows of unequal length.
class RaggedTable : public Error { public: using Error::Error; };

/// Type I data requested at the zero multi-index (Q_0 = 0 convention).
class EmptyIndex : public Error { public: using Error::Error; };

/// Operation defined only for r = 2.
class NotBivariate : public Error { public: using Error::Error; };

/// Closed forms requested for a custom measure.
class UnsupportedFamily : public Error { public: using Error::Error; };

/// An identity's evaluation point coincides with a pole.
class EvaluationPole : public Error { public: using Error::Error; };

/// Two recurrence step directions produced different polynomials.
class InconsistentField : public Error { public: using Error::Error; };

/// Numeric evaluation requested outside a weight's support.
class DomainError : public Error { public: using Error::Error; };

} // namespace mop
