#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semiconj {

  /// Base class of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class AssociativityViolation : public Error {
   public:
    AssociativityViolation(std::size_t a, std::size_t b, std::size_t c);
    std::size_t a, b, c;
  };

  class IndexOutOfRange : public Error {
    using Error::Error;
  };

  class ClosureBudgetExceeded : public Error {
    using Error::Error;
  };

  class NotInverse : public Error {
    using Error::Error;
  };

  class NotRegular : public Error {
    using Error::Error;
  };

  class NotIdempotent : public Error {
    using Error::Error;
  };

  class NoIdentity : public Error {
    using Error::Error;
  };

  class NotGroup : public Error {
    using Error::Error;
  };

  class DegenerateEigenvalues : public Error {
    using Error::Error;
  };

  class DegreeMismatch : public Error {
    using Error::Error;
  };

  class DegreeTooLarge : public Error {
    using Error::Error;
  };

  class NotClosed : public Error {
    using Error::Error;
  };

  class IrregularDClass : public Error {
    using Error::Error;
  };

  // Raised by frame translation when the unique solution is missing or
  // duplicated; either way the frame is corrupt.
  class FrameCorruption : public Error {
    using Error::Error;
  };

  class MultiplicativityViolation : public Error {
   public:
    MultiplicativityViolation(std::size_t s, std::size_t t, double deviation);
    std::size_t s, t;
    double      deviation;
  };

  class ParseError : public Error {
    using Error::Error;
  };

}  // namespace semiconj
