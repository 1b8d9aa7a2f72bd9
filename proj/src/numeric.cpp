#include "k3orb/numeric.hpp"

namespace k3orb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidType: return "InvalidType";
    case ErrorCode::NotAde: return "NotAde";
    case ErrorCode::FullSupportRemoved: return "FullSupportRemoved";
    case ErrorCode::NotAdeRemovedSet: return "NotAdeRemovedSet";
    case ErrorCode::UnknownComponent: return "UnknownComponent";
    case ErrorCode::EulerSumMismatch: return "EulerSumMismatch";
    case ErrorCode::DetNotOne: return "DetNotOne";
    case ErrorCode::ProductNotIdentity: return "ProductNotIdentity";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_display_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return to_fraction_string(q);
}

}  // namespace k3orb
