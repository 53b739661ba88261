#pragma once

#include <stdexcept>
#include <string>

namespace charkit {

/// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHARKIT_ERROR(Name)                        \
  class Name : public Error {                      \
   public:                                         \
    explicit Name(const std::string& what)         \
        : Error(std::string(#Name) + ": " + what) {} \
  }

CHARKIT_ERROR(DivisionByZero);
CHARKIT_ERROR(UnsupportedSpecialization);
CHARKIT_ERROR(ParseError);
CHARKIT_ERROR(InvalidCartan);
CHARKIT_ERROR(IndexOutOfRange);
CHARKIT_ERROR(DatumMismatch);
CHARKIT_ERROR(UnsupportedLabel);
CHARKIT_ERROR(SchemaError);
CHARKIT_ERROR(ConsistencyError);
CHARKIT_ERROR(OrderCapExceeded);
CHARKIT_ERROR(InvariantViolation);
CHARKIT_ERROR(KeyMismatch);
CHARKIT_ERROR(PinningError);
CHARKIT_ERROR(SizeCapExceeded);
CHARKIT_ERROR(NonIntegerCharacter);
CHARKIT_ERROR(AmbiguousSign);

#undef CHARKIT_ERROR

}  // namespace charkit
