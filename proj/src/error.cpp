#include "acta/error.hpp"

namespace acta {

  char const* to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::InvalidInput: return "InvalidInput";
      case ErrorCode::NotAssociative: return "NotAssociative";
      case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
      case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
      case ErrorCode::NotCompatible: return "NotCompatible";
      case ErrorCode::NotUnital: return "NotUnital";
      case ErrorCode::UnknownFamily: return "UnknownFamily";
      case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
      case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
      case ErrorCode::OrderTooLarge: return "OrderTooLarge";
      case ErrorCode::MixedMonoids: return "MixedMonoids";
      case ErrorCode::EmptySeeds: return "EmptySeeds";
      case ErrorCode::NotARightIdeal: return "NotARightIdeal";
      case ErrorCode::NotInjective: return "NotInjective";
      case ErrorCode::IdealsIntersect: return "IdealsIntersect";
      case ErrorCode::LeftReversible: return "LeftReversible";
      case ErrorCode::UnknownTheorem: return "UnknownTheorem";
      case ErrorCode::BoundsTooLarge: return "BoundsTooLarge";
      case ErrorCode::NotParallel: return "NotParallel";
      case ErrorCode::NotASubact: return "NotASubact";
      case ErrorCode::NotAMorphism: return "NotAMorphism";
      case ErrorCode::NotConnected: return "NotConnected";
    }
    return "Unknown";
  }

}  // namespace acta
