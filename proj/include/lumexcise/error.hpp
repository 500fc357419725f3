#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lumexcise {

enum class Errc {
  InvalidArgument,
  DimensionMismatch,
  Io,
  AllUnknownWindow,
  EmptyFront,
  CandidateInvalid,
  NoCandidate,
  AllUnknown,
  EmptyRegion,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Io: return "Io";
    case Errc::AllUnknownWindow: return "AllUnknownWindow";
    case Errc::EmptyFront: return "EmptyFront";
    case Errc::CandidateInvalid: return "CandidateInvalid";
    case Errc::NoCandidate: return "NoCandidate";
    case Errc::AllUnknown: return "AllUnknown";
    case Errc::EmptyRegion: return "EmptyRegion";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lumexcise
