#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsu {

enum class Errc {
  InvalidEdge,
  InvalidParams,
  Disconnected,
  TooLarge,
  GenerationFailed,
  NotFound,
  NoInteriorOptimum,
  NotATree,
  AllCensored,
  Io,
  Parse,
};

inline std::string_view to_string(Errc e) {
  switch (e) {
    case Errc::InvalidEdge: return "InvalidEdge";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::Disconnected: return "Disconnected";
    case Errc::TooLarge: return "TooLarge";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::NotFound: return "NotFound";
    case Errc::NoInteriorOptimum: return "NoInteriorOptimum";
    case Errc::NotATree: return "NotATree";
    case Errc::AllCensored: return "AllCensored";
    case Errc::Io: return "Io";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gsu
