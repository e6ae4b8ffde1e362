#pragma once

#include <stdexcept>
#include <string>

namespace abelcert {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside the operation's domain (malformed text, zero where nonzero
// is required, values below a stated lower bound, ...).
struct InvalidInput : Error {
  using Error::Error;
};

// A stated mathematical hypothesis of a construction fails for the inputs;
// the message names the violated hypothesis.
struct HypothesisError : Error {
  using Error::Error;
};

// A configured search or enumeration budget was exhausted before an answer
// was reached. Never used to report a mathematical "no".
struct BudgetError : Error {
  using Error::Error;
};

// An internal cross-check failed. Always a bug, never a user error.
struct InternalCheckError : Error {
  using Error::Error;
};

// Requested computation is outside the supported range of the method
// (for example Galois classification beyond degree 4).
struct UnsupportedError : Error {
  using Error::Error;
};

// A truncated Laurent series did not carry enough terms to answer.
struct TruncationError : Error {
  using Error::Error;
};

}  // namespace abelcert
