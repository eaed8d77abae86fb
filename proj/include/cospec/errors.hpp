#pragma once

#include <stdexcept>
#include <string>

namespace cospec {

// Base class for all domain errors raised by the library.
// The CLI maps Error to exit code 2; anything else is an internal error (1).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedEncoding : Error { using Error::Error; };
struct OrderOutOfRange : Error { using Error::Error; };
struct OrderMismatch : Error { using Error::Error; };

struct SyntaxError : Error { using Error::Error; };
struct UnaryInternalNode : Error { using Error::Error; };
struct MultipleStarLeaves : Error { using Error::Error; };
struct StarAbsentWhenRequired : Error { using Error::Error; };
struct NotACograph : Error { using Error::Error; };
struct PatternTooSmall : Error { using Error::Error; };
struct VertexNotFound : Error { using Error::Error; };

struct PatternAbsent : Error { using Error::Error; };
struct CorpusIncomplete : Error { using Error::Error; };
struct AmbiguousBasePair : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

struct DomainError : Error { using Error::Error; };
struct InsufficientTruncation : Error { using Error::Error; };
struct ConsistencyFailure : Error { using Error::Error; };
struct DegenerateSingularity : Error { using Error::Error; };

}  // namespace cospec
