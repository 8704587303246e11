#ifndef SCHEMELAB_ERRORS_HPP
#define SCHEMELAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schemelab {

// Base class for every error this library raises on a violated precondition
// or an invalid input. Callers that only need "it failed" can catch this.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotDisjointError : public Error {
public:
    explicit NotDisjointError(const std::string& what) : Error(what) {}
};

class LengthMismatchError : public Error {
public:
    explicit LengthMismatchError(const std::string& what) : Error(what) {}
};

class OutOfDomainError : public Error {
public:
    explicit OutOfDomainError(const std::string& what) : Error(what) {}
};

// Raised by type-sequence validation; carries the index and the axiom tag
// ('a'..'d') of the first violated axiom.
class AxiomViolationError : public Error {
public:
    AxiomViolationError(int level, char axiom, const std::string& what)
        : Error(what), level_(level), axiom_(axiom) {}
    int level() const { return level_; }
    char axiom() const { return axiom_; }

private:
    int level_;
    char axiom_;
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

class IllFormedSchemeError : public Error {
public:
    explicit IllFormedSchemeError(const std::string& what) : Error(what) {}
};

class KindMismatchError : public Error {
public:
    explicit KindMismatchError(const std::string& what) : Error(what) {}
};

class InsufficientWidthError : public Error {
public:
    explicit InsufficientWidthError(const std::string& what) : Error(what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Malformed file or unparsable inline input.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace schemelab

#endif
