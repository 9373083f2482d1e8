#pragma once

#include <stdexcept>
#include <string>

namespace polya {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that needs at least one symbol received the empty word.
class EmptyWordError : public Error {
 public:
  explicit EmptyWordError(const std::string& where)
      : Error(where + ": empty word") {}
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Pattern/word length mismatch in substring statistics.
class LengthError : public Error {
 public:
  using Error::Error;
};

/// delta0 = delta1 = 0 passed to a formula that needs delta0 + delta1 > 0.
class DegenerateNoiseError : public Error {
 public:
  explicit DegenerateNoiseError(const std::string& where)
      : Error(where + ": requires delta0 + delta1 > 0") {}
};

class InvalidHistoryError : public Error {
 public:
  using Error::Error;
};

class UnsupportedSpecError : public Error {
 public:
  using Error::Error;
};

class RuleMismatchError : public Error {
 public:
  using Error::Error;
};

/// Exact computation refused because its projected cost exceeds the budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Exact mode was requested but a noise value was not given as a rational.
class NonRationalNoiseError : public Error {
 public:
  using Error::Error;
};

/// Plug-in estimation requested on a support too large to sample.
class SupportTooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace polya
