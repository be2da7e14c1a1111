#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

// Base of every error raised by the library. Subclasses name the failed
// precondition so callers (and tests) can dispatch on the type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHORDAL_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

// graph
CHORDAL_DEFINE_ERROR(UnknownVertex);
CHORDAL_DEFINE_ERROR(SelfLoop);
CHORDAL_DEFINE_ERROR(NotChordal);
CHORDAL_DEFINE_ERROR(NotASimplex);
CHORDAL_DEFINE_ERROR(NotSimplicial);
CHORDAL_DEFINE_ERROR(InvalidPeo);

// freegroup
CHORDAL_DEFINE_ERROR(UnknownSymbol);
CHORDAL_DEFINE_ERROR(AlphabetMismatch);
CHORDAL_DEFINE_ERROR(MissingImage);

// purebraid
CHORDAL_DEFINE_ERROR(BadIndex);
CHORDAL_DEFINE_ERROR(IndexSetMismatch);
CHORDAL_DEFINE_ERROR(NotASubset);
CHORDAL_DEFINE_ERROR(NotInKernel);
CHORDAL_DEFINE_ERROR(BudgetExceeded);

// gamma
CHORDAL_DEFINE_ERROR(NotAnEdge);
CHORDAL_DEFINE_ERROR(GraphMismatch);
CHORDAL_DEFINE_ERROR(WrongIndexing);

// invariants
CHORDAL_DEFINE_ERROR(TooLarge);

// text / JSON input
CHORDAL_DEFINE_ERROR(ParseError);

// An internal consistency check failed; indicates a bug, not bad input.
CHORDAL_DEFINE_ERROR(InvariantViolation);

#undef CHORDAL_DEFINE_ERROR

}  // namespace chordal
