#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotslope {

enum class ErrorKind {
  MalformedSyntax,
  LabelOutOfRange,
  LabelMultiplicity,
  InconsistentOrientation,
  MultiComponent,
  NonPlanar,
  InvalidFace,
  ColoringInconsistent,
  DegenerateColoring,
  IncompleteState,
  TooManyCrossings,
  NonIntegralExponent,
  ZeroPolynomial,
  NotAlternating,
  NotReduced,
  NotSymmetric,
  InvariantViolation,
  DuplicateName,
  IoError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSyntax: return "MalformedSyntax";
    case ErrorKind::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorKind::LabelMultiplicity: return "LabelMultiplicity";
    case ErrorKind::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorKind::MultiComponent: return "MultiComponent";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::InvalidFace: return "InvalidFace";
    case ErrorKind::ColoringInconsistent: return "ColoringInconsistent";
    case ErrorKind::DegenerateColoring: return "DegenerateColoring";
    case ErrorKind::IncompleteState: return "IncompleteState";
    case ErrorKind::TooManyCrossings: return "TooManyCrossings";
    case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Exception carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace knotslope
