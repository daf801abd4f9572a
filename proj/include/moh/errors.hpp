#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace moh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ZeroPolynomialError : Error {
    ZeroPolynomialError() : Error("operation undefined on the zero polynomial") {}
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

// Parameter validation failures for (n, lambda).
struct ParamError : Error {
    enum class Kind { EvenN, LambdaTooSmall, NotCoprime, InternalDivisibility };
    Kind kind;
    ParamError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

// Forward-substitution solver failures.
struct SolveError : Error {
    enum class Kind { Inconsistent, Underdetermined };
    Kind kind;
    std::size_t equation = 0;   // offending equation index (Inconsistent)
    std::string unknown;        // never-pinned unknown (Underdetermined)
    std::string residual;       // nonzero residual as text (Inconsistent)
    SolveError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

// Chain construction failures.
struct ChainError : Error {
    enum class Kind { Inconsistent, Degenerate };
    Kind kind;
    int chain;
    ChainError(Kind k, int chain_, const std::string& msg)
        : Error(msg), kind(k), chain(chain_) {}
};

struct TailInconsistentError : Error {
    int chain;
    std::string monomial;
    TailInconsistentError(int chain_, const std::string& mono, const std::string& msg)
        : Error(msg), chain(chain_), monomial(mono) {}
};

struct ExponentError : Error {
    enum class Kind { NonIntegral, Negative };
    Kind kind;
    ExponentError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

struct NotN1Error : Error {
    NotN1Error() : Error("operation requires n = 1") {}
};

struct BudgetExceededError : Error {
    using Error::Error;
};

}  // namespace moh
