#ifndef ACTA_ERROR_HPP_
#define ACTA_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace acta {

  // Values mirror acta_status in acta.h; keep the two in sync.
  enum class ErrorCode : int {
    InvalidInput       = 2,
    NotAssociative     = 3,
    NoIdentityAtZero   = 4,
    IndexOutOfRange    = 5,
    NotCompatible      = 6,
    NotUnital          = 7,
    UnknownFamily      = 8,
    ParamOutOfRange    = 9,
    SizeCapExceeded    = 10,
    OrderTooLarge      = 11,
    MixedMonoids       = 12,
    EmptySeeds         = 13,
    NotARightIdeal     = 14,
    NotInjective       = 15,
    IdealsIntersect    = 16,
    LeftReversible     = 17,
    UnknownTheorem     = 18,
    BoundsTooLarge     = 19,
    NotParallel        = 20,
    NotASubact         = 21,
    NotAMorphism       = 22,
    NotConnected       = 23,
  };

  char const* to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace acta

#endif  // ACTA_ERROR_HPP_
